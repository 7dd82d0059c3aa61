"""Topics source: subject annotations from the public knowledge base.

One SPARQL request per key resolves the PID to its annotated topics with
English labels. (The same lookup is possible through the REST API in two
steps — entity search, then claim expansion — but a single request keeps
one sub-request per planned source; see the connector guide.)
"""

from __future__ import annotations

from ..models import Topic
from ..pids import Doi, OrcidId
from .common import SourceChannel, expect_ok, load_json, upstream_parser

SOURCE = "topics_api"
SPARQL_PATH = "/sparql"

# Work topics: DOI property → main-subject property.
_DOI_QUERY = """SELECT DISTINCT ?topic ?topicLabel WHERE {{
  ?work wdt:P356 "{doi}" .
  ?work wdt:P921 ?topic .
  SERVICE wikibase:label {{ bd:serviceParam wikibase:language "en". }}
}}"""

# Person topics: ORCID property → field-of-work property.
_ORCID_QUERY = """SELECT DISTINCT ?topic ?topicLabel WHERE {{
  ?person wdt:P496 "{orcid}" .
  ?person wdt:P101 ?topic .
  SERVICE wikibase:label {{ bd:serviceParam wikibase:language "en". }}
}}"""


def doi_topics_query(doi: Doi) -> str:
    # The knowledge base stores DOIs uppercase.
    return _DOI_QUERY.format(doi=doi.value.upper())


def orcid_topics_query(orcid: OrcidId) -> str:
    return _ORCID_QUERY.format(orcid=orcid.value)


@upstream_parser(SOURCE)
def parse_topics(body: bytes) -> tuple[Topic, ...]:
    """One Topic per case-folded label, first occurrence wins."""
    data = load_json(body)
    bindings = (data.get("results") or {}).get("bindings") or []
    seen = set()
    topics = []
    for binding in bindings:
        label = str(((binding or {}).get("topicLabel") or {}).get("value") or "")
        if not label:
            continue
        folded = label.casefold()
        if folded in seen:
            continue
        seen.add(folded)
        uri = str(((binding.get("topic") or {}).get("value")) or "")
        topic_id = uri.rsplit("/", 1)[-1] if uri else None
        topics.append(Topic(label=label, topic_id=topic_id or None))
    return tuple(topics)


class TopicsConnector:
    def __init__(self, channel: SourceChannel):
        self.channel = channel

    def _fetch(self, key: str, query: str) -> tuple[Topic, ...]:
        response = self.channel.get(
            key, SPARQL_PATH, params={"query": query, "format": "json"})
        ok = expect_ok(response, source=SOURCE, key=key, not_found_ok=True)
        return parse_topics(ok.body) if ok is not None else ()

    def fetch_topics(self, doi: Doi) -> tuple[Topic, ...]:
        return self._fetch(doi.value, doi_topics_query(doi))

    def fetch_person_topics(self, orcid: OrcidId) -> tuple[Topic, ...]:
        return self._fetch(orcid.value, orcid_topics_query(orcid))
