"""Shared test helpers: fast gateways, stub clusters, query text constants."""

from __future__ import annotations

from dataclasses import replace

import pytest

from scholarly_context.config import default_config
from scholarly_context.fixtures.scenario import Scenario, load_bundled
from scholarly_context.fixtures.stub import StubCluster
from scholarly_context.gateway.core import Gateway

PAPER_DOI = "10.1101/2020.03.08.20030643"
PERSON_ORCID = "0000-0001-6383-7148"

EARTH_DOIS = ("10.5194/gmd-2019-0001", "10.5194/gmd-2020-0002", "10.1234/esm-unknown")
RNAUGHT_DOIS = ("10.1101/2020.04.0001", "10.1101/2020.04.0002")

# Query text replayed exactly as written in the upstream documentation of
# the unified schema, comments included.
FULL_PAPER_QUERY = """{ # Semantic Scholar query
  paper(doi: "10.1101/2020.03.08.20030643") {
    doi title abstract
    citations { title doi }
    references { title doi }

    #OpenAIRE query
    project {
      funder project
    }

    #Wikidata query
    topicDetails { topic }

    #Altmetric query
    metricsInformation {
      url
      image
} } }"""

FULL_PERSON_QUERY = """{ person(id: "https://orcid.org/0000-0001-6383-7148") {
    id name
    employment {
      organizationName
      organizationId
      startDate endDate
    }
    publications {
      nodes { id type
        titles { title }
        fundingReferences { awardTitle awardNumber }
        creators { givenName familyName id }
    } }
    datasets {
      totalCount
      nodes { id type
        titles { title }
        creators { givenName familyName id }
    } }
    softwares {
      totalCount
      nodes { id type
        titles { title }
        creators { givenName familyName id }
    } }
    topics
} }"""


def tuned_config(mode: str = "fixtures", *, ttl_s: int = 0, timeout_ms: int = 2000,
                backoff_ms: float = 5.0, deadline_ms: int = 10_000,
                base_urls: dict[str, str] | None = None, **top):
    """A gateway config tuned for tests: tiny backoff, cache off by default."""
    config = default_config(mode)
    sources = {
        name: replace(cfg, ttl_s=ttl_s, timeout_ms=timeout_ms,
                      retry_backoff_ms=backoff_ms,
                      base_url=(base_urls or {}).get(name, cfg.base_url))
        for name, cfg in config.sources.items()
    }
    return replace(config, sources=sources, request_deadline_ms=deadline_ms, **top)


def make_gateway(scenario: Scenario, **kwargs) -> Gateway:
    """Fixture-mode gateway playing back the given scenario."""
    return Gateway(tuned_config("fixtures", **kwargs), scenario=scenario)


def gateway_at_stubs(cluster: StubCluster, **kwargs) -> Gateway:
    """Live-mode gateway whose upstreams are the stub cluster."""
    config = tuned_config("live", base_urls=cluster.base_urls, **kwargs)
    return Gateway(config)


@pytest.fixture
def happy_scenario() -> Scenario:
    return load_bundled("happy")


@pytest.fixture
def paper_scenario() -> Scenario:
    return load_bundled("paper_happy")


@pytest.fixture
def person_scenario() -> Scenario:
    return load_bundled("person_happy")


@pytest.fixture
def happy_gateway(happy_scenario) -> Gateway:
    return make_gateway(happy_scenario)


@pytest.fixture
def stub_cluster(happy_scenario):
    cluster = StubCluster(happy_scenario).start()
    yield cluster
    cluster.stop()
