"""Unified domain types shared by connectors, gateway, and widgets.

Every type is an immutable value object; invariants are enforced at
construction so a value that exists is a value that is valid. Connectors
catch InvalidRecord during mapping and re-raise it as MalformedUpstream.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from enum import Enum
from urllib.parse import urlparse

from .errors import InvalidRecord
from .pids import Doi, OrcidId, OrgId

SOURCES = ("articles_api", "projects_api", "topics_api", "metrics_api", "pid_graph")

# ISO-8601 calendar date at year, month, or day precision.
_DATE_RE = re.compile(r"^\d{4}(-\d{2}(-\d{2})?)?$")


class ArtifactType(str, Enum):
    publication = "publication"
    dataset = "dataset"
    software = "software"
    other = "other"


def _require(condition: bool, message: str) -> None:
    if not condition:
        raise InvalidRecord(message)


def _check_absolute_url(value: str, what: str) -> None:
    parsed = urlparse(value)
    _require(parsed.scheme in ("http", "https") and bool(parsed.netloc),
             f"{what} must be an absolute URL, got {value!r}")


@dataclass(frozen=True)
class WorkRef:
    """A citation or reference entry: title required, DOI when known."""

    title: str
    doi: Doi | None = None

    def __post_init__(self):
        _require(bool(self.title), "work reference needs a non-empty title")


@dataclass(frozen=True)
class WorkCore:
    """Article metadata from the articles source.

    Sources may truncate citation/reference lists while reporting the full
    count, so citation_count is authoritative and never inferred from
    len(citations).
    """

    doi: Doi
    title: str
    abstract: str | None = None
    citations: tuple[WorkRef, ...] = ()
    references: tuple[WorkRef, ...] = ()
    citation_count: int | None = None

    def __post_init__(self):
        _require(bool(self.title), "work needs a non-empty title")
        if self.citation_count is not None:
            _require(self.citation_count >= 0, "citation_count must be non-negative")
            _require(self.citation_count >= len(self.citations),
                     "citation_count smaller than the citation list")


@dataclass(frozen=True)
class Project:
    funder: str = ""
    project_name: str = ""
    award_number: str | None = None

    def __post_init__(self):
        _require(bool(self.funder) or bool(self.project_name),
                 "project needs a funder or a name")


@dataclass(frozen=True)
class Topic:
    label: str
    topic_id: str | None = None

    def __post_init__(self):
        _require(bool(self.label), "topic needs a non-empty label")


@dataclass(frozen=True)
class Metrics:
    details_url: str
    badge_image_url: str
    score: float | None = None

    def __post_init__(self):
        _check_absolute_url(self.details_url, "details_url")
        _check_absolute_url(self.badge_image_url, "badge_image_url")
        if self.score is not None:
            _require(self.score >= 0, "score must be non-negative")


def _date_key(value: str) -> tuple[int, int, int]:
    parts = value.split("-")
    return (int(parts[0]),
            int(parts[1]) if len(parts) > 1 else 0,
            int(parts[2]) if len(parts) > 2 else 0)


@dataclass(frozen=True)
class EmploymentRecord:
    """One affiliation; an absent end_date means a current position."""

    organization_name: str
    organization_id: OrgId | None = None
    start_date: str | None = None
    end_date: str | None = None

    def __post_init__(self):
        _require(bool(self.organization_name), "employment needs an organization name")
        for value in (self.start_date, self.end_date):
            if value is not None:
                _require(bool(_DATE_RE.match(value)),
                         f"dates must be ISO-8601 (year precision or finer), got {value!r}")
        if (self.start_date and self.end_date
                and len(self.start_date) == 10 and len(self.end_date) == 10):
            _require(self.start_date <= self.end_date, "start_date after end_date")

    @property
    def is_current(self) -> bool:
        return self.end_date is None


def sort_employment(records: list[EmploymentRecord]) -> tuple[EmploymentRecord, ...]:
    """Most recent first: start_date descending, undated records last,
    current positions winning ties."""
    def key(rec: EmploymentRecord):
        has_start = rec.start_date is not None
        start = _date_key(rec.start_date) if rec.start_date else (0, 0, 0)
        return (not has_start, tuple(-part for part in start), not rec.is_current)

    return tuple(sorted(records, key=key))


@dataclass(frozen=True)
class Creator:
    given_name: str = ""
    family_name: str = ""
    id: OrcidId | None = None

    def __post_init__(self):
        _require(bool(self.given_name) or bool(self.family_name),
                 "creator needs a given or family name")


@dataclass(frozen=True)
class ArtifactNode:
    """One PID-identified artifact from the PID graph."""

    id: str
    artifact_type: ArtifactType
    titles: tuple[str, ...] = ()
    creators: tuple[Creator, ...] = ()
    funding: tuple[Project, ...] = ()

    def __post_init__(self):
        _require(bool(self.id), "artifact node needs an id")
        if self.artifact_type is not ArtifactType.other:
            _require(bool(self.titles), f"{self.artifact_type.value} node needs a title")


@dataclass(frozen=True)
class ArtifactConnection:
    """Possibly-truncated page of artifact nodes plus the full count."""

    total_count: int = 0
    nodes: tuple[ArtifactNode, ...] = ()

    def __post_init__(self):
        _require(self.total_count >= 0, "total_count must be non-negative")
        _require(self.total_count >= len(self.nodes),
                 "total_count smaller than the node list")


@dataclass(frozen=True)
class PersonRecord:
    """Root person payload from the PID graph: identity, career, artifacts."""

    orcid: OrcidId
    name: str
    employment: tuple[EmploymentRecord, ...] = ()
    publications: ArtifactConnection = field(default_factory=ArtifactConnection)
    datasets: ArtifactConnection = field(default_factory=ArtifactConnection)
    softwares: ArtifactConnection = field(default_factory=ArtifactConnection)

    def __post_init__(self):
        _require(bool(self.name), "person needs a name")


@dataclass(frozen=True)
class SourceResult:
    """One upstream sub-result with attribution and cache provenance."""

    source: str
    key: str
    payload: object
    fetched_at: float
    from_cache: bool = False

    def __post_init__(self):
        _require(self.source in SOURCES, f"unknown source: {self.source!r}")
