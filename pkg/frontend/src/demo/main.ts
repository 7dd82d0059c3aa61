/**
 * Demo page: mounts all three widgets against a locally running gateway.
 * Start the backend first (offline fixture mode is fine):
 *
 *   scholarly-context serve --port 8350 --scenario happy
 */

import { renderFacetWidget } from "../facetWidget.js";
import { renderPaperWidget } from "../paperWidget.js";
import { renderProfileWidget } from "../profileWidget.js";
import type { ComparisonDocument } from "../types.js";

const params = new URLSearchParams(window.location.search);
const gatewayBaseUrl = params.get("gateway") ?? "http://127.0.0.1:8350";
const doi = params.get("doi") ?? "10.1101/2020.03.08.20030643";
const orcid = params.get("orcid") ?? "https://orcid.org/0000-0001-6383-7148";

// Mirrors the bundled example comparison; counts come from the gateway.
const comparison: ComparisonDocument = {
  title: "Comparison of earth system models",
  columns: [
    { name: "model family", kind: "text" },
    { name: "equilibrium climate sensitivity (K)", kind: "numeric" },
    { name: "ocean resolution (deg)", kind: "numeric" },
  ],
  rows: [
    { label: "CESM2", doi: "10.5194/gmd-2019-0001",
      cells: { "model family": "CESM",
               "equilibrium climate sensitivity (K)": 5.2,
               "ocean resolution (deg)": 1.0 } },
    { label: "UKESM1-0-LL", doi: "10.5194/gmd-2020-0002",
      cells: { "model family": "UKESM",
               "equilibrium climate sensitivity (K)": 5.3,
               "ocean resolution (deg)": 1.0 } },
    { label: "ESM-X legacy run", doi: "10.1234/esm-unknown",
      cells: { "model family": "ESM-X",
               "equilibrium climate sensitivity (K)": 2.6 } },
  ],
};

void renderPaperWidget(
  document.getElementById("paper-widget") as HTMLElement,
  { gatewayBaseUrl, doi });
void renderProfileWidget(
  document.getElementById("profile-widget") as HTMLElement,
  { gatewayBaseUrl, orcid });
void renderFacetWidget(
  document.getElementById("facet-widget") as HTMLElement,
  { gatewayBaseUrl, comparison });
