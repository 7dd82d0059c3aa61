"""Field-driven query planning: requested fields decide which sources run.

The root source (articles for papers, the PID graph for people) is always
planned — context without a resolvable subject is meaningless — while every
contextual source appears only when a field it serves was selected.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..models import SOURCES
from ..pids import Doi, normalize_doi, normalize_orcid
from .queries import ParsedQuery

# Paper field group → serving source; core fields all come from the root.
PAPER_GROUP_SOURCES = {
    "project": "projects_api",
    "topicDetails": "topics_api",
    "metricsInformation": "metrics_api",
}
PAPER_CORE_FIELDS = ("doi", "title", "abstract", "citations", "references")


@dataclass(frozen=True)
class SubRequest:
    source: str
    key: str


@dataclass(frozen=True)
class QueryPlan:
    root: str  # paper | person | comparison_citations
    key: str
    sub_requests: tuple[SubRequest, ...]
    query: ParsedQuery | None = None

    @property
    def root_source(self) -> str | None:
        if self.root == "paper":
            return "articles_api"
        if self.root == "person":
            return "pid_graph"
        return None


def _ordered(subs: set[SubRequest]) -> tuple[SubRequest, ...]:
    return tuple(sorted(subs, key=lambda s: (SOURCES.index(s.source), s.key)))


def plan_query(parsed: ParsedQuery) -> QueryPlan:
    """Derive the sub-request set for one parsed query."""
    if parsed.root == "paper":
        doi = normalize_doi(parsed.key)
        subs = {SubRequest("articles_api", doi.value)}
        for group, source in PAPER_GROUP_SOURCES.items():
            if parsed.selects(group):
                subs.add(SubRequest(source, doi.value))
        return QueryPlan("paper", doi.value, _ordered(subs), parsed)

    orcid = normalize_orcid(parsed.key)
    subs = {SubRequest("pid_graph", orcid.value)}
    if parsed.selects("topics"):
        subs.add(SubRequest("topics_api", orcid.value))
    return QueryPlan("person", orcid.value, _ordered(subs), parsed)


def plan_citation_counts(dois: list[Doi]) -> QueryPlan:
    """One articles sub-request per distinct DOI, in first-seen order."""
    if not dois:
        raise ValueError("citation-count plan needs at least one DOI")
    subs = tuple(SubRequest("articles_api", doi.value)
                 for doi in dict.fromkeys(dois))
    return QueryPlan("comparison_citations", "", subs)
