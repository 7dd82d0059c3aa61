/**
 * Comparison facet panel: citation min/max controls plus one threshold
 * control per numeric content column. Filtering always executes on the
 * gateway (one semantics for widget and API users); every adjustment
 * re-applies server-side with latest-wins request cancellation and updates
 * the visible rows and the kept/filtered/unknown counter.
 */

import { GatewayClient, isAbort, LatestWins, type FetchLike } from "./client.js";
import { clear, el } from "./dom.js";
import {
  CITATION_TARGET,
  type ComparisonDocument,
  type FacetFilterSpec,
  type FilterResponse,
} from "./types.js";

export interface FacetWidgetConfig {
  gatewayBaseUrl: string;
  /** The comparison document itself, or a URL it can be fetched from. */
  comparison: ComparisonDocument | string;
  fetchImpl?: FetchLike;
}

interface ColumnFilterState {
  op: FacetFilterSpec["op"];
  threshold: number | null;
}

export interface FacetState {
  minCitations: number | null;
  maxCitations: number | null;
  columns: Record<string, ColumnFilterState>;
}

export function buildFilters(state: FacetState): FacetFilterSpec[] {
  const filters: FacetFilterSpec[] = [];
  if (state.minCitations != null) {
    filters.push({ target: CITATION_TARGET, op: "ge", threshold: state.minCitations });
  }
  if (state.maxCitations != null) {
    filters.push({ target: CITATION_TARGET, op: "le", threshold: state.maxCitations });
  }
  for (const [column, spec] of Object.entries(state.columns)) {
    if (spec.threshold != null) {
      filters.push({ target: column, op: spec.op, threshold: spec.threshold });
    }
  }
  return filters;
}

export function counterText(summary: FilterResponse["summary"]): string {
  return `${summary.kept} kept · ${summary.dropped} filtered · ${summary.unknown} unknown`;
}

function renderRows(container: HTMLElement, table: ComparisonDocument): void {
  clear(container);
  if (!table.rows.length) {
    container.appendChild(el("p", "scx-empty-result",
      "no compared articles match the current filters"));
    return;
  }
  const grid = el("table", "scx-comparison");
  const head = el("tr");
  head.appendChild(el("th", undefined, "article"));
  head.appendChild(el("th", undefined, "citations"));
  for (const column of table.columns) {
    head.appendChild(el("th", undefined, column.name));
  }
  grid.appendChild(head);
  for (const row of table.rows) {
    const tr = el("tr", "scx-row");
    tr.dataset.label = row.label;
    tr.appendChild(el("td", "scx-row-label", row.label));
    tr.appendChild(el("td", "scx-row-citations",
      row.citation_count != null ? String(row.citation_count) : "—"));
    for (const column of table.columns) {
      const value = row.cells[column.name];
      tr.appendChild(el("td", undefined, value == null ? "" : String(value)));
    }
    grid.appendChild(tr);
  }
  container.appendChild(grid);
}

export async function renderFacetWidget(
  host: HTMLElement,
  config: FacetWidgetConfig,
): Promise<void> {
  const client = new GatewayClient(config.gatewayBaseUrl, config.fetchImpl);
  const inFlight = new LatestWins();
  clear(host);
  host.classList.add("scx-widget", "scx-facet-widget");
  host.appendChild(el("p", "scx-loading", "loading comparison…"));

  let document_: ComparisonDocument;
  let baseline: FilterResponse;
  try {
    if (typeof config.comparison === "string") {
      const fetchImpl = config.fetchImpl ?? ((i: string, init?: RequestInit) => fetch(i, init));
      const response = await fetchImpl(config.comparison);
      document_ = (await response.json()) as ComparisonDocument;
    } else {
      document_ = config.comparison;
    }
    baseline = await client.filterComparison(document_, []);
  } catch (error) {
    clear(host);
    host.appendChild(el("p", "scx-offline",
      "gateway unreachable — comparison unavailable"));
    const retry = el("button", "scx-retry", "retry");
    retry.addEventListener("click", () => {
      void renderFacetWidget(host, config);
    });
    host.appendChild(retry);
    return;
  }

  clear(host);
  host.appendChild(el("h2", "scx-title", document_.title));

  const state: FacetState = { minCitations: null, maxCitations: null, columns: {} };
  const bounds = baseline.bounds[CITATION_TARGET] ?? { min: null, max: null, present: 0 };
  const controls = el("form", "scx-facet-controls");
  controls.addEventListener("submit", (event) => event.preventDefault());
  const counter = el("p", "scx-counter", counterText(baseline.summary));
  const rows = el("div", "scx-rows");
  renderRows(rows, baseline.table);

  async function refresh(): Promise<void> {
    const signal = inFlight.next();
    try {
      const result = await client.filterComparison(
        document_, buildFilters(state), signal);
      counter.textContent = counterText(result.summary);
      renderRows(rows, result.table);
    } catch (error) {
      if (!isAbort(error)) {
        counter.textContent = "filtering failed — adjust to retry";
      }
    }
  }

  function numberInput(labelText: string, className: string,
                       apply: (value: number | null) => void): HTMLElement {
    const wrap = el("label", "scx-facet");
    wrap.appendChild(el("span", "scx-facet-label", labelText));
    const input = el("input", className);
    input.type = "range";
    input.min = String(bounds.min ?? 0);
    input.max = String(bounds.max ?? 0);
    input.step = "1";
    input.value = input.min;
    const display = el("span", "scx-facet-value", "off");
    input.addEventListener("input", () => {
      const value = Number(input.value);
      display.textContent = String(value);
      apply(value);
      void refresh();
    });
    wrap.appendChild(input);
    wrap.appendChild(display);
    return wrap;
  }

  controls.appendChild(numberInput(
    `citations ≥ (${bounds.present} of ${document_.rows.length} rows have counts)`,
    "scx-min-citations",
    (value) => { state.minCitations = value; }));
  controls.appendChild(numberInput("citations ≤", "scx-max-citations",
    (value) => { state.maxCitations = value; }));

  for (const column of document_.columns.filter((c) => c.kind === "numeric")) {
    const wrap = el("label", "scx-facet scx-column-facet");
    wrap.appendChild(el("span", "scx-facet-label", column.name));
    const op = el("select", "scx-facet-op");
    for (const [value, text] of [["gt", ">"], ["ge", "≥"], ["lt", "<"],
                                 ["le", "≤"], ["eq", "="]] as const) {
      const option = el("option", undefined, text);
      option.value = value;
      op.appendChild(option);
    }
    const input = el("input", "scx-facet-threshold");
    input.type = "number";
    input.step = "any";
    const apply = () => {
      const raw = input.value.trim();
      state.columns[column.name] = {
        op: op.value as FacetFilterSpec["op"],
        threshold: raw === "" ? null : Number(raw),
      };
      void refresh();
    };
    op.addEventListener("change", apply);
    input.addEventListener("input", apply);
    wrap.appendChild(op);
    wrap.appendChild(input);
    controls.appendChild(wrap);
  }

  const clearButton = el("button", "scx-clear", "clear filters");
  clearButton.type = "button";
  clearButton.addEventListener("click", () => {
    state.minCitations = null;
    state.maxCitations = null;
    state.columns = {};
    for (const input of Array.from(
      controls.querySelectorAll<HTMLInputElement>("input"))) {
      input.value = input.type === "range" ? input.min : "";
    }
    for (const display of Array.from(
      controls.querySelectorAll<HTMLElement>(".scx-facet-value"))) {
      display.textContent = "off";
    }
    void refresh();
  });
  controls.appendChild(clearButton);

  host.appendChild(controls);
  host.appendChild(counter);
  host.appendChild(rows);
}
