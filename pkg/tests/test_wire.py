"""Response shaping: selection-driven keys, nulls for absent groups."""

import json

from scholarly_context.gateway.wire import envelope_dict, shape_data

from conftest import (FULL_PAPER_QUERY, FULL_PERSON_QUERY, PAPER_DOI,
                      PERSON_ORCID, make_gateway)


def test_paper_shape_follows_selection_order(happy_gateway):
    plan, response = happy_gateway.run_query(FULL_PAPER_QUERY)
    shaped = shape_data(plan, response.data)
    paper = shaped["paper"]
    assert list(paper.keys()) == ["doi", "title", "abstract", "citations",
                                  "references", "project", "topicDetails",
                                  "metricsInformation"]
    assert paper["doi"] == PAPER_DOI
    assert {"title", "doi"} == set(paper["citations"][0].keys())
    assert paper["project"][0]["funder"] == "European Commission"
    assert paper["topicDetails"][0] == {"topic": "COVID-19"}
    assert set(paper["metricsInformation"].keys()) == {"url", "image"}


def test_partial_selection_emits_only_requested_keys(happy_gateway):
    plan, response = happy_gateway.run_query(
        f'{{ paper(doi: "{PAPER_DOI}") {{ citations {{ title }} }} }}')
    paper = shape_data(plan, response.data)["paper"]
    assert list(paper.keys()) == ["citations"]
    assert all(set(c.keys()) == {"title"} for c in paper["citations"])


def test_person_shape(happy_gateway):
    plan, response = happy_gateway.run_query(FULL_PERSON_QUERY)
    person = shape_data(plan, response.data)["person"]
    assert person["id"] == PERSON_ORCID
    assert person["employment"][0]["organizationName"].startswith("Data Archiving")
    assert person["employment"][0]["endDate"] is None
    assert "totalCount" not in person["publications"]  # not selected
    assert person["datasets"]["totalCount"] == 2
    node = person["publications"]["nodes"][0]
    assert node["type"] == "publication"
    assert node["fundingReferences"][0]["awardNumber"] == "823827"
    assert person["topics"] == ["open science", "data management",
                                "psycholinguistics"]


def test_failed_group_serializes_as_null(paper_scenario):
    from scholarly_context.fixtures.scenario import FixtureEntry
    scenario = paper_scenario.with_entries(FixtureEntry(
        source="metrics_api", key=PAPER_DOI, status=429, body=b""))
    gateway = make_gateway(scenario)
    plan, response = gateway.run_query(FULL_PAPER_QUERY)
    envelope = envelope_dict(plan, response)
    assert envelope["data"]["paper"]["metricsInformation"] is None
    assert envelope["errors"][0]["kind"] == "RateLimited"
    assert envelope["timing"]["sources"]["metrics_api"]["ms"] >= 0


def test_root_failure_envelope(paper_scenario):
    from scholarly_context.fixtures.scenario import FixtureEntry
    scenario = paper_scenario.with_entries(FixtureEntry(
        source="articles_api", key=PAPER_DOI, status=404, body=b""))
    gateway = make_gateway(scenario)
    plan, response = gateway.run_query(FULL_PAPER_QUERY)
    envelope = envelope_dict(plan, response)
    assert envelope["data"] is None
    assert [e["kind"] for e in envelope["errors"]] == ["NotFound"]


def test_citation_count_shape(happy_gateway):
    from scholarly_context.pids import Doi
    response = happy_gateway.query_citation_counts(
        [Doi("10.5194/gmd-2019-0001"), Doi("10.9/none")])
    from scholarly_context.gateway.planner import plan_citation_counts
    plan = plan_citation_counts([Doi("10.5194/gmd-2019-0001"), Doi("10.9/none")])
    shaped = shape_data(plan, response.data)
    assert shaped == {"10.5194/gmd-2019-0001": 12, "10.9/none": None}


def test_envelope_is_json_serializable(happy_gateway):
    plan, response = happy_gateway.run_query(FULL_PAPER_QUERY)
    text = json.dumps(envelope_dict(plan, response))
    parsed = json.loads(text)
    assert parsed["errors"] == []
    assert "total_ms" in parsed["timing"]
