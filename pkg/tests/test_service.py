"""The HTTP surface: /query, /health, /comparison/filter, CORS."""

import pytest
from fastapi.testclient import TestClient

from scholarly_context.facets import table_to_dict, load_table
from scholarly_context.fixtures.scenario import FixtureEntry, bundled_scenario_dir
from scholarly_context.gateway.service import create_app

from conftest import (FULL_PAPER_QUERY, FULL_PERSON_QUERY, PAPER_DOI,
                      gateway_at_stubs, make_gateway, tuned_config)

LISTING_PAPER_FIELDS = ["doi", "title", "abstract", "citations", "references",
                        "project", "topicDetails", "metricsInformation"]


@pytest.fixture
def client(happy_scenario):
    gateway = make_gateway(happy_scenario)
    app = create_app(gateway.config, gateway=gateway)
    return TestClient(app)


def post_query(client, query, variables=None):
    body = {"query": query}
    if variables is not None:
        body["variables"] = variables
    return client.post("/query", json=body)


class TestQueryEndpoint:
    def test_paper_query_replay(self, client):
        response = post_query(client, FULL_PAPER_QUERY)
        assert response.status_code == 200
        envelope = response.json()
        paper = envelope["data"]["paper"]
        assert list(paper.keys()) == LISTING_PAPER_FIELDS
        assert envelope["errors"] == []
        assert set(envelope["timing"]["sources"]) == {
            "articles_api", "projects_api", "topics_api", "metrics_api"}

    def test_person_query_replay(self, client):
        response = post_query(client, FULL_PERSON_QUERY)
        assert response.status_code == 200
        person = response.json()["data"]["person"]
        assert person["name"] == "Ricarda Braukmann"
        assert person["softwares"]["totalCount"] == 1

    def test_variables(self, client):
        response = post_query(client, "{ paper(doi: $doi) { title } }",
                              {"doi": PAPER_DOI})
        assert response.status_code == 200
        assert response.json()["data"]["paper"]["title"]

    def test_gibberish_is_400_schema_error(self, client):
        response = post_query(client, "SELECT * FROM papers")
        assert response.status_code == 400
        assert response.json()["errors"][0]["kind"] == "SchemaError"

    def test_malformed_pid_is_400(self, client):
        response = post_query(client, '{ paper(doi: "junk") { title } }')
        assert response.status_code == 400
        assert response.json()["errors"][0]["kind"] == "MalformedPid"

    def test_partial_failure_is_200_with_errors(self, paper_scenario):
        scenario = paper_scenario.with_entries(FixtureEntry(
            source="metrics_api", key=PAPER_DOI, status=429, body=b""))
        gateway = make_gateway(scenario)
        client = TestClient(create_app(gateway.config, gateway=gateway))
        response = post_query(client, FULL_PAPER_QUERY)
        assert response.status_code == 200
        envelope = response.json()
        assert envelope["data"]["paper"]["metricsInformation"] is None
        assert [e["kind"] for e in envelope["errors"]] == ["RateLimited"]

    def test_unknown_doi_is_200_with_absent_data(self, client):
        response = post_query(client, '{ paper(doi: "10.9/none") { title } }')
        assert response.status_code == 200
        envelope = response.json()
        assert envelope["data"] is None
        assert envelope["errors"][0]["kind"] == "NotFound"


class TestHealth:
    def test_fixture_mode_reports_scenario_sources(self, client):
        payload = TestClient(client.app).get("/health").json()
        assert payload["status"] == "ok"
        assert payload["mode"] == "fixtures"
        assert all(v["reachable"] for v in payload["upstreams"].values())

    def test_missing_source_flagged_unreachable(self, paper_scenario):
        gateway = make_gateway(paper_scenario)  # no pid_graph entries
        client = TestClient(create_app(gateway.config, gateway=gateway))
        payload = client.get("/health").json()
        assert payload["upstreams"]["pid_graph"]["reachable"] is False
        assert payload["upstreams"]["articles_api"]["reachable"] is True

    def test_live_mode_probes_stubs(self, stub_cluster):
        gateway = gateway_at_stubs(stub_cluster)
        client = TestClient(create_app(gateway.config, gateway=gateway))
        stub_cluster.stop("metrics_api")
        payload = client.get("/health").json()
        assert payload["upstreams"]["metrics_api"]["reachable"] is False
        assert payload["upstreams"]["articles_api"]["reachable"] is True


class TestComparisonEndpoint:
    @pytest.fixture
    def table_payload(self):
        path = bundled_scenario_dir().parent / "data" / \
            "comparison_earth_system_models.json"
        return table_to_dict(load_table(path))

    def test_filter_with_summary_and_bounds(self, client, table_payload):
        response = client.post("/comparison/filter", json={
            "table": table_payload,
            "filters": [{"target": "citation_count", "op": "ge", "threshold": 1}],
        })
        assert response.status_code == 200
        payload = response.json()
        assert payload["summary"] == {"kept": 1, "dropped": 1, "unknown": 1}
        assert [r["label"] for r in payload["table"]["rows"]] == ["CESM2"]
        assert payload["bounds"]["citation_count"] == {
            "min": 0, "max": 12, "present": 2}

    def test_no_filters_returns_enriched_table(self, client, table_payload):
        response = client.post("/comparison/filter",
                               json={"table": table_payload, "filters": []})
        payload = response.json()
        assert payload["summary"] == {"kept": 3, "dropped": 0, "unknown": 0}
        counts = [r.get("citation_count") for r in payload["table"]["rows"]]
        assert counts == [12, 0, None]

    def test_unknown_column_is_400(self, client, table_payload):
        response = client.post("/comparison/filter", json={
            "table": table_payload,
            "filters": [{"target": "ghost", "op": "ge", "threshold": 1}],
        })
        assert response.status_code == 400
        assert response.json()["errors"][0]["kind"] == "UnknownColumn"

    def test_malformed_table_is_400(self, client):
        response = client.post("/comparison/filter", json={
            "table": {"rows": [{"label": "a", "cells": {"ghost": 1}}]},
            "filters": [],
        })
        assert response.status_code == 400


def test_cors_allows_configured_origin(happy_scenario):
    config = tuned_config("fixtures", cors_origins=("http://widgets.local",))
    gateway = make_gateway(happy_scenario)
    client = TestClient(create_app(config, gateway=gateway))
    response = client.options("/query", headers={
        "Origin": "http://widgets.local",
        "Access-Control-Request-Method": "POST",
    })
    assert response.headers.get("access-control-allow-origin") == \
        "http://widgets.local"
