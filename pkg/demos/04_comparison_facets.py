"""
Faceted comparison filtering
============================

A comparison table is enriched with citation counts from the articles
source, then filtered declaratively: contextual thresholds (citations) and
numeric content columns compose by conjunction.
"""

from dataclasses import replace

from scholarly_context import Gateway, default_config
from scholarly_context.facets import (CITATION_TARGET, FacetFilter,
                                      apply_facets, enrich_with_citations,
                                      facet_summary, load_table,
                                      partition_rows)
from scholarly_context.fixtures.scenario import bundled_scenario_dir

config = replace(default_config("fixtures"), scenario="comparison_small")
gateway = Gateway(config)

table = load_table(bundled_scenario_dir().parent / "data" /
                   "comparison_earth_system_models.json")
print("comparison:", table.title)
print("rows:", [row.label for row in table.rows])

# Enrichment: one batched, cached lookup for all DOI-bearing rows.
enriched = enrich_with_citations(
    table, lambda dois: gateway.query_citation_counts(dois).data)
print("citation counts:", [row.citation_count for row in enriched.rows])
assert [row.citation_count for row in enriched.rows] == [12, 0, None]

# The summary gives the widget its slider bounds and the coverage count.
bounds = facet_summary(enriched)
print("citation bounds:", bounds[CITATION_TARGET])

# Filter: at least one citation. Rows with unknown counts are excluded and
# reported separately so the exclusion is visible to users.
filters = [FacetFilter(CITATION_TARGET, "ge", 1)]
kept, dropped, unknown = partition_rows(enriched, filters)
print(f"{len(kept)} kept · {len(dropped)} filtered · {len(unknown)} unknown")
assert [row.label for row in kept] == ["CESM2"]

# Content and context compose: climate sensitivity above 5 K AND any
# citations at all.
combined = apply_facets(enriched, [
    FacetFilter("equilibrium climate sensitivity (K)", "gt", 5.0),
    FacetFilter(CITATION_TARGET, "ge", 1),
])
print("combined filter keeps:", [row.label for row in combined.rows])
assert [row.label for row in combined.rows] == ["CESM2"]

# The empty filter list is the identity.
assert apply_facets(enriched, []) is enriched
