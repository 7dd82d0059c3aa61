"""
Paper context in one federated query
====================================

One query text names the fields; the gateway plans one sub-request per
serving source, fans them out concurrently, and merges the answers with
per-group source attribution. Runs fully offline against the bundled
scenario.
"""

from dataclasses import replace

from scholarly_context import Gateway, default_config
from scholarly_context.gateway import envelope_dict

config = replace(default_config("fixtures"), scenario="paper_happy")
gateway = Gateway(config)

query = """
{ paper(doi: "10.1101/2020.03.08.20030643") {
    doi title abstract
    citations { title doi }
    references { title doi }
    project { funder project }
    topicDetails { topic }
    metricsInformation { url image }
} }
"""

plan, response = gateway.run_query(query)
assert response.errors == ()

# The plan shows field-driven pruning: four sources for the full selection.
print("planned sub-requests:", [(s.source, s.key) for s in plan.sub_requests])
assert len(plan.sub_requests) == 4

context = response.data
print("title:", context.core.title)
print("citations:", len(context.core.citations),
      "of", context.core.citation_count, "total")
print("projects:", [p.project_name for p in context.projects])
print("topics:", [t.label for t in context.topics])
print("attention score:", context.metrics.score)
print("attribution:", context.attribution)

# A selection without metrics never contacts the metrics source.
small_plan, _ = gateway.run_query('{ paper(doi: "10.1101/2020.03.08.20030643") '
                                  '{ title project { funder } } }')
assert {s.source for s in small_plan.sub_requests} == \
    {"articles_api", "projects_api"}

# The wire envelope mirrors the query's own field names.
envelope = envelope_dict(plan, response)
print("wire keys:", list(envelope["data"]["paper"].keys()))
