"""Merged result types: contexts, the partial-failure envelope, timings.

A context group field is None when its sub-request was not planned or
failed; an empty tuple means the source answered and had nothing. Source
attribution is derived from populated groups, so it can never drift out of
sync with the data.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from ..models import (ArtifactConnection, EmploymentRecord, Metrics, Project,
                      Topic, WorkCore)
from ..pids import OrcidId


@dataclass(frozen=True)
class WorkContext:
    core: WorkCore
    projects: tuple[Project, ...] | None = None
    topics: tuple[Topic, ...] | None = None
    metrics: Metrics | None = None

    @property
    def attribution(self) -> dict[str, str]:
        groups = {"core": "articles_api"}
        if self.projects:
            groups["projects"] = "projects_api"
        if self.topics:
            groups["topics"] = "topics_api"
        if self.metrics is not None:
            groups["metrics"] = "metrics_api"
        return groups


@dataclass(frozen=True)
class PersonContext:
    orcid: OrcidId
    name: str
    employment: tuple[EmploymentRecord, ...] = ()
    publications: ArtifactConnection = field(default_factory=ArtifactConnection)
    datasets: ArtifactConnection = field(default_factory=ArtifactConnection)
    softwares: ArtifactConnection = field(default_factory=ArtifactConnection)
    topics: tuple[Topic, ...] | None = None

    @property
    def attribution(self) -> dict[str, str]:
        groups = {"person": "pid_graph"}
        if self.topics:
            groups["topics"] = "topics_api"
        return groups


@dataclass(frozen=True)
class SubError:
    source: str
    key: str
    kind: str
    message: str

    def to_dict(self) -> dict:
        return {"source": self.source, "key": self.key,
                "kind": self.kind, "message": self.message}


@dataclass(frozen=True)
class SourceTiming:
    ms: float
    cached: bool = False


@dataclass(frozen=True)
class FederatedResponse:
    """data and errors may coexist; data is absent only on root failure."""

    data: object | None
    errors: tuple[SubError, ...] = ()
    timing: dict[str, SourceTiming] = field(default_factory=dict)
    total_ms: float = 0.0

    @property
    def root_failed(self) -> bool:
        return self.data is None

    def timing_dict(self) -> dict:
        return {
            "total_ms": round(self.total_ms, 3),
            "sources": {
                name: {"ms": round(t.ms, 3), "cached": t.cached}
                for name, t in self.timing.items()
            },
        }
