/** Test doubles: a scriptable fetch and canned gateway payloads. */

import type { FetchLike } from "../src/client.js";
import type {
  ComparisonDocument,
  Envelope,
  FilterResponse,
  PaperData,
  PersonData,
} from "../src/types.js";

export function jsonResponse(payload: unknown, status = 200): Response {
  return new Response(JSON.stringify(payload), {
    status,
    headers: { "Content-Type": "application/json" },
  });
}

export interface RouteTable {
  query?: (body: { query: string }) => unknown;
  filter?: (body: { table: ComparisonDocument; filters: unknown[] }) => unknown;
}

/** A fetch stub dispatching on path, recording every request body. */
export function fakeFetch(routes: RouteTable) {
  const calls: { url: string; body: unknown }[] = [];
  const impl: FetchLike = async (url, init) => {
    const body = init?.body ? JSON.parse(String(init.body)) : undefined;
    calls.push({ url, body });
    if (url.endsWith("/query") && routes.query) {
      return jsonResponse(routes.query(body));
    }
    if (url.endsWith("/comparison/filter") && routes.filter) {
      return jsonResponse(routes.filter(body));
    }
    return jsonResponse({ detail: "no route" }, 404);
  };
  return { impl, calls };
}

export const paperPayload: PaperData = {
  doi: "10.1101/2020.03.08.20030643",
  title: "A recorded article title",
  abstract: "Recorded abstract text.",
  citations: [{ title: "Citing work", doi: "10.1/c" }],
  references: [{ title: "Referenced work", doi: null }],
  project: [{ funder: "European Commission", project: "Observatory" }],
  topicDetails: [{ topic: "COVID-19" }, { topic: "epidemiology" }],
  metricsInformation: {
    url: "https://metrics.example/details",
    image: "https://metrics.example/badge.png",
    score: 1234.5,
  },
};

export function paperEnvelope(
  overrides: Partial<PaperData> = {},
  errors: Envelope<unknown>["errors"] = [],
): Envelope<{ paper: PaperData }> {
  return { data: { paper: { ...paperPayload, ...overrides } }, errors };
}

export const personPayload: PersonData = {
  id: "0000-0001-6383-7148",
  name: "Ricarda Braukmann",
  employment: [
    { organizationName: "DANS", organizationId: null,
      startDate: "2018-09-01", endDate: null },
    { organizationName: "Radboud University", organizationId: null,
      startDate: "2013-09-01", endDate: "2018-08-31" },
  ],
  publications: { totalCount: 3, nodes: [
    { id: "https://doi.org/10.1/p", type: "publication",
      titles: [{ title: "A publication" }],
      fundingReferences: [{ awardTitle: "Grant", awardNumber: "42" }] },
  ] },
  datasets: { totalCount: 0, nodes: [] },
  softwares: { totalCount: 1, nodes: [
    { id: "https://doi.org/10.1/s", type: "software",
      titles: [{ title: "A tool" }] },
  ] },
  topics: ["open science", "data management"],
};

export function personEnvelope(
  overrides: Partial<PersonData> = {},
  errors: Envelope<unknown>["errors"] = [],
): Envelope<{ person: PersonData }> {
  return { data: { person: { ...personPayload, ...overrides } }, errors };
}

export const comparisonDocument: ComparisonDocument = {
  title: "Comparison of earth system models",
  columns: [
    { name: "model family", kind: "text" },
    { name: "equilibrium climate sensitivity (K)", kind: "numeric" },
  ],
  rows: [
    { label: "CESM2", doi: "10.5194/gmd-2019-0001",
      cells: { "model family": "CESM",
               "equilibrium climate sensitivity (K)": 5.2 } },
    { label: "UKESM1-0-LL", doi: "10.5194/gmd-2020-0002",
      cells: { "model family": "UKESM",
               "equilibrium climate sensitivity (K)": 5.3 } },
    { label: "ESM-X legacy run", doi: "10.1234/esm-unknown",
      cells: { "model family": "ESM-X",
               "equilibrium climate sensitivity (K)": 2.6 } },
  ],
};

/** Server-side filtering reference used by the fetch stub. */
export function filterReference(
  body: { table: ComparisonDocument; filters: { target: string; op: string; threshold: number }[] },
  counts: Record<string, number | null>,
): FilterResponse {
  const ops: Record<string, (a: number, b: number) => boolean> = {
    lt: (a, b) => a < b, le: (a, b) => a <= b, gt: (a, b) => a > b,
    ge: (a, b) => a >= b, eq: (a, b) => a === b,
  };
  const enriched = body.table.rows.map((row) => ({
    ...row,
    citation_count: row.doi != null ? counts[row.doi] ?? undefined : undefined,
  }));
  let kept = 0, dropped = 0, unknown = 0;
  const keptRows = [];
  for (const row of enriched) {
    const values = body.filters.map((f) =>
      f.target === "citation_count" ? row.citation_count
        : (row.cells[f.target] as number | undefined));
    if (body.filters.length && values.some((v) => v == null)) {
      unknown += 1;
    } else if (values.every((v, i) =>
        ops[body.filters[i].op](v as number, body.filters[i].threshold))) {
      kept += 1;
      keptRows.push(row);
    } else {
      dropped += 1;
    }
  }
  const present = enriched.filter((r) => r.citation_count != null)
    .map((r) => r.citation_count as number);
  return {
    table: { ...body.table, rows: body.filters.length ? keptRows : enriched },
    summary: body.filters.length
      ? { kept, dropped, unknown }
      : { kept: enriched.length, dropped: 0, unknown: 0 },
    bounds: {
      citation_count: {
        min: present.length ? Math.min(...present) : null,
        max: present.length ? Math.max(...present) : null,
        present: present.length,
      },
    },
  };
}

export function flush(): Promise<void> {
  return new Promise((resolve) => setTimeout(resolve, 0));
}
