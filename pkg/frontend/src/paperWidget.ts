/**
 * Paper context panel: four labeled groups (article metadata with
 * citations/references, projects, topics, metrics badge), each attributed
 * to its serving source and degrading independently on sub-query errors.
 */

import { GatewayClient, type FetchLike } from "./client.js";
import { clear, el, group, unavailable } from "./dom.js";
import { paperContextQuery } from "./queries.js";
import type { Envelope, ErrorEntry, PaperData, WorkRef } from "./types.js";

export interface PaperWidgetConfig {
  gatewayBaseUrl: string;
  doi: string;
  maxListEntries?: number;
  fetchImpl?: FetchLike;
}

function errorFor(errors: ErrorEntry[], source: string): ErrorEntry | undefined {
  return errors.find((entry) => entry.source === source);
}

function refList(refs: WorkRef[], limit: number): HTMLElement {
  const list = el("ul", "scx-ref-list");
  for (const ref of refs.slice(0, limit)) {
    const item = el("li");
    if (ref.doi) {
      const link = el("a", "scx-ref", ref.title);
      link.href = `https://doi.org/${ref.doi}`;
      item.appendChild(link);
    } else {
      item.appendChild(el("span", "scx-ref", ref.title));
    }
    list.appendChild(item);
  }
  if (refs.length > limit) {
    list.appendChild(el("li", "scx-more", `… ${refs.length - limit} more`));
  }
  return list;
}

function articleGroup(paper: PaperData, limit: number): HTMLElement {
  const section = group("article", "articles_api");
  section.appendChild(el("h2", "scx-title", paper.title ?? ""));
  if (paper.abstract) {
    section.appendChild(el("p", "scx-abstract", paper.abstract));
  }
  const citations = paper.citations ?? [];
  const references = paper.references ?? [];
  section.appendChild(el("h3", "scx-subhead", `citations (${citations.length})`));
  section.appendChild(refList(citations, limit));
  section.appendChild(el("h3", "scx-subhead", `references (${references.length})`));
  section.appendChild(refList(references, limit));
  return section;
}

function projectsGroup(paper: PaperData, errors: ErrorEntry[]): HTMLElement {
  const section = group("projects", "projects_api");
  const failure = errorFor(errors, "projects_api");
  if (failure) return unavailable(section, failure.kind);
  const projects = paper.project ?? [];
  if (!projects.length) {
    section.appendChild(el("p", "scx-empty", "no linked projects"));
    return section;
  }
  const list = el("ul", "scx-project-list");
  for (const entry of projects) {
    const label = [entry.project, entry.funder].filter(Boolean).join(" — ");
    list.appendChild(el("li", "scx-project", label));
  }
  section.appendChild(list);
  return section;
}

function topicsGroup(paper: PaperData, errors: ErrorEntry[]): HTMLElement {
  const section = group("topics", "topics_api");
  const failure = errorFor(errors, "topics_api");
  if (failure) return unavailable(section, failure.kind);
  const topics = paper.topicDetails ?? [];
  if (!topics.length) {
    section.appendChild(el("p", "scx-empty", "no topic annotations"));
    return section;
  }
  const chips = el("div", "scx-chips");
  for (const detail of topics) {
    chips.appendChild(el("span", "scx-chip", detail.topic));
  }
  section.appendChild(chips);
  return section;
}

function metricsGroup(paper: PaperData, errors: ErrorEntry[]): HTMLElement {
  const section = group("metrics", "metrics_api");
  const failure = errorFor(errors, "metrics_api");
  if (failure) return unavailable(section, failure.kind);
  const metrics = paper.metricsInformation;
  if (!metrics) {
    section.appendChild(el("p", "scx-empty", "no attention data for this article"));
    return section;
  }
  const badge = el("img", "scx-badge");
  badge.src = metrics.image;
  badge.alt = "attention badge";
  section.appendChild(badge);
  if (metrics.score != null) {
    section.appendChild(el("p", "scx-score", `attention score ${metrics.score}`));
  }
  const link = el("a", "scx-details", "details");
  link.href = metrics.url;
  section.appendChild(link);
  return section;
}

export async function renderPaperWidget(
  host: HTMLElement,
  config: PaperWidgetConfig,
): Promise<void> {
  const client = new GatewayClient(config.gatewayBaseUrl, config.fetchImpl);
  const limit = config.maxListEntries ?? 5;
  clear(host);
  host.classList.add("scx-widget", "scx-paper-widget");
  host.appendChild(el("p", "scx-loading", "loading article context…"));

  let envelope: Envelope<{ paper: PaperData }>;
  try {
    envelope = await client.query(paperContextQuery(config.doi));
  } catch (error) {
    clear(host);
    host.appendChild(el("p", "scx-offline",
      "gateway unreachable — context unavailable"));
    const retry = el("button", "scx-retry", "retry");
    retry.addEventListener("click", () => {
      void renderPaperWidget(host, config);
    });
    host.appendChild(retry);
    return;
  }

  clear(host);
  if (!envelope.data) {
    const kind = envelope.errors[0]?.kind ?? "NotFound";
    host.appendChild(el("p", "scx-not-found",
      `article not found (${kind}): ${config.doi}`));
    return;
  }

  const paper = envelope.data.paper;
  host.appendChild(articleGroup(paper, limit));
  host.appendChild(projectsGroup(paper, envelope.errors));
  host.appendChild(topicsGroup(paper, envelope.errors));
  host.appendChild(metricsGroup(paper, envelope.errors));
}
