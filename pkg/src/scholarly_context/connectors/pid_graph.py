"""PID graph source: person identity, employment, and linked artifacts.

One GraphQL request returns the whole person record; connections may be
truncated pages, so total_count is carried separately from the node list.
"""

from __future__ import annotations

from ..errors import ChecksumMismatch, MalformedPid, NotFound
from ..models import (ArtifactConnection, ArtifactNode, ArtifactType, Creator,
                      EmploymentRecord, PersonRecord, Project,
                      sort_employment)
from ..pids import OrcidId, OrgId, normalize_orcid
from .common import SourceChannel, expect_ok, load_json, upstream_parser

SOURCE = "pid_graph"
GRAPHQL_PATH = "/graphql"

PERSON_QUERY = """query Person($id: ID!) {
  person(id: $id) {
    id
    name
    employment { organizationName organizationId startDate endDate }
    publications {
      totalCount
      nodes {
        id type titles { title }
        creators { givenName familyName id }
        fundingReferences { funderName awardTitle awardNumber }
      }
    }
    datasets {
      totalCount
      nodes { id type titles { title } creators { givenName familyName id } }
    }
    softwares {
      totalCount
      nodes { id type titles { title } creators { givenName familyName id } }
    }
  }
}"""

_TYPE_MAP = {
    "text": ArtifactType.publication,
    "publication": ArtifactType.publication,
    "scholarlyarticle": ArtifactType.publication,
    "journalarticle": ArtifactType.publication,
    "preprint": ArtifactType.publication,
    "dataset": ArtifactType.dataset,
    "software": ArtifactType.software,
    "softwaresourcecode": ArtifactType.software,
    "computationalnotebook": ArtifactType.software,
}


def _creator(raw: dict) -> Creator | None:
    given = str(raw.get("givenName") or "")
    family = str(raw.get("familyName") or "")
    if not given and not family:
        return None
    orcid = None
    raw_id = raw.get("id")
    if raw_id:
        try:
            orcid = normalize_orcid(str(raw_id))
        except (MalformedPid, ChecksumMismatch):
            orcid = None
    return Creator(given_name=given, family_name=family, id=orcid)


def _funding(raw_list) -> tuple[Project, ...]:
    projects = []
    for raw in raw_list or []:
        funder = str((raw or {}).get("funderName") or "")
        title = str(raw.get("awardTitle") or "")
        if not funder and not title:
            continue
        number = raw.get("awardNumber")
        projects.append(Project(funder=funder, project_name=title,
                                award_number=str(number) if number else None))
    return tuple(projects)


def _node(raw: dict) -> ArtifactNode:
    kind = _TYPE_MAP.get(str(raw.get("type") or "").casefold(), ArtifactType.other)
    titles = tuple(str(t.get("title"))
                   for t in raw.get("titles") or [] if t.get("title"))
    creators = tuple(c for c in (_creator(r or {}) for r in raw.get("creators") or [])
                     if c is not None)
    return ArtifactNode(id=str(raw.get("id") or ""), artifact_type=kind,
                        titles=titles, creators=creators,
                        funding=_funding(raw.get("fundingReferences")))


def _connection(raw: dict | None) -> ArtifactConnection:
    raw = raw or {}
    nodes = tuple(_node(r or {}) for r in raw.get("nodes") or [])
    total = raw.get("totalCount")
    return ArtifactConnection(
        total_count=int(total) if total is not None else len(nodes),
        nodes=nodes)


def _employment(raw_list) -> tuple[EmploymentRecord, ...]:
    records = []
    for raw in raw_list or []:
        org_id = (raw or {}).get("organizationId")
        records.append(EmploymentRecord(
            organization_name=str(raw.get("organizationName") or ""),
            organization_id=OrgId(str(org_id)) if org_id else None,
            start_date=raw.get("startDate") or None,
            end_date=raw.get("endDate") or None,
        ))
    return sort_employment(records)


@upstream_parser(SOURCE)
def parse_person(orcid: OrcidId, body: bytes) -> PersonRecord | None:
    """Map the GraphQL person payload; None when the graph has no person."""
    person = (load_json(body).get("data") or {}).get("person")
    if person is None:
        return None
    return PersonRecord(
        orcid=orcid,
        name=str(person.get("name") or ""),
        employment=_employment(person.get("employment")),
        publications=_connection(person.get("publications")),
        datasets=_connection(person.get("datasets")),
        softwares=_connection(person.get("softwares")),
    )


class PidGraphConnector:
    def __init__(self, channel: SourceChannel):
        self.channel = channel

    def fetch_person(self, orcid: OrcidId) -> PersonRecord:
        response = self.channel.post_json(
            orcid.value, GRAPHQL_PATH,
            {"query": PERSON_QUERY, "variables": {"id": orcid.url}})
        ok = expect_ok(response, source=SOURCE, key=orcid.value)
        person = parse_person(orcid, ok.body)
        if person is None:
            raise NotFound(f"no person for {orcid}", source=SOURCE, key=orcid.value)
        return person
