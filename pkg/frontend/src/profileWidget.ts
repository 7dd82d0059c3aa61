/**
 * Contributor profile card: name, employment timeline (most recent first,
 * as the gateway delivers it), tabbed artifact lists with total-count
 * badges, and research-topic chips.
 */

import { GatewayClient, type FetchLike } from "./client.js";
import { clear, el } from "./dom.js";
import { personProfileQuery } from "./queries.js";
import type { Connection, Envelope, PersonData } from "./types.js";

export interface ProfileWidgetConfig {
  gatewayBaseUrl: string;
  orcid: string;
  fetchImpl?: FetchLike;
}

const TABS: { key: "publications" | "datasets" | "softwares"; label: string }[] = [
  { key: "publications", label: "publications" },
  { key: "datasets", label: "datasets" },
  { key: "softwares", label: "software" },
];

function employmentTimeline(person: PersonData): HTMLElement {
  const wrap = el("div", "scx-employment");
  wrap.appendChild(el("h3", "scx-subhead", "employment"));
  const entries = person.employment ?? [];
  if (!entries.length) {
    wrap.appendChild(el("p", "scx-empty", "no employment records"));
    return wrap;
  }
  const list = el("ol", "scx-timeline");
  for (const entry of entries) {
    const item = el("li", "scx-position");
    item.appendChild(el("span", "scx-org", entry.organizationName));
    const span = `${entry.startDate ?? "?"} → ${entry.endDate ?? "present"}`;
    item.appendChild(el("span", "scx-dates", span));
    list.appendChild(item);
  }
  wrap.appendChild(list);
  return wrap;
}

function artifactList(connection: Connection | undefined): HTMLElement {
  const list = el("ul", "scx-artifacts");
  const nodes = connection?.nodes ?? [];
  if (!nodes.length) {
    list.appendChild(el("li", "scx-empty", "none recorded"));
    return list;
  }
  for (const node of nodes) {
    const item = el("li", "scx-artifact");
    item.appendChild(el("span", "scx-artifact-title",
      node.titles[0]?.title ?? node.id));
    item.appendChild(el("span", "scx-artifact-type", node.type));
    const funding = node.fundingReferences ?? [];
    if (funding.length) {
      const award = funding[0];
      item.appendChild(el("span", "scx-award",
        `${award.awardTitle ?? ""}${award.awardNumber ? ` (${award.awardNumber})` : ""}`));
    }
    list.appendChild(item);
  }
  return list;
}

function artifactTabs(person: PersonData): HTMLElement {
  const wrap = el("div", "scx-tabs");
  const bar = el("div", "scx-tab-bar");
  const panes: Record<string, HTMLElement> = {};

  for (const tab of TABS) {
    const connection = person[tab.key];
    const button = el("button", "scx-tab");
    button.dataset.tab = tab.key;
    button.appendChild(el("span", "scx-tab-label", tab.label));
    button.appendChild(el("span", "scx-count-badge",
      String(connection?.totalCount ?? 0)));
    const pane = el("div", "scx-tab-pane");
    pane.dataset.pane = tab.key;
    pane.appendChild(artifactList(connection));
    pane.hidden = tab.key !== "publications";
    if (tab.key === "publications") button.classList.add("scx-tab-active");
    button.addEventListener("click", () => {
      for (const other of Object.values(panes)) other.hidden = true;
      for (const sibling of Array.from(bar.children)) {
        sibling.classList.remove("scx-tab-active");
      }
      pane.hidden = false;
      button.classList.add("scx-tab-active");
    });
    panes[tab.key] = pane;
    bar.appendChild(button);
    wrap.appendChild(pane);
  }
  wrap.insertBefore(bar, wrap.firstChild);
  return wrap;
}

function topicChips(person: PersonData, degraded: boolean): HTMLElement {
  const wrap = el("div", "scx-topics");
  if (degraded || person.topics == null) {
    wrap.appendChild(el("p", "scx-unavailable scx-topics-notice",
      "research topics temporarily unavailable"));
    return wrap;
  }
  wrap.appendChild(el("h3", "scx-subhead", "research topics"));
  if (!person.topics.length) {
    wrap.appendChild(el("p", "scx-empty", "no topics recorded"));
    return wrap;
  }
  const chips = el("div", "scx-chips");
  for (const topic of person.topics) {
    chips.appendChild(el("span", "scx-chip", topic));
  }
  wrap.appendChild(chips);
  return wrap;
}

export async function renderProfileWidget(
  host: HTMLElement,
  config: ProfileWidgetConfig,
): Promise<void> {
  const client = new GatewayClient(config.gatewayBaseUrl, config.fetchImpl);
  clear(host);
  host.classList.add("scx-widget", "scx-profile-widget");
  host.appendChild(el("p", "scx-loading", "loading contributor profile…"));

  let envelope: Envelope<{ person: PersonData }>;
  try {
    envelope = await client.query(personProfileQuery(config.orcid));
  } catch (error) {
    clear(host);
    host.appendChild(el("p", "scx-offline",
      "gateway unreachable — profile unavailable"));
    const retry = el("button", "scx-retry", "retry");
    retry.addEventListener("click", () => {
      void renderProfileWidget(host, config);
    });
    host.appendChild(retry);
    return;
  }

  clear(host);
  if (!envelope.data) {
    host.appendChild(el("p", "scx-not-found",
      `no contributor record for ${config.orcid}`));
    return;
  }

  const person = envelope.data.person;
  const header = el("header", "scx-profile-header");
  header.appendChild(el("h2", "scx-name", person.name ?? ""));
  header.appendChild(el("span", "scx-orcid", person.id ?? config.orcid));
  host.appendChild(header);
  host.appendChild(employmentTimeline(person));
  host.appendChild(artifactTabs(person));
  const topicsDegraded = envelope.errors.some((e) => e.source === "topics_api");
  host.appendChild(topicChips(person, topicsDegraded));
}
