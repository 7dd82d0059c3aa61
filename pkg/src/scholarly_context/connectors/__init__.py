"""Connectors: one adapter per upstream source role.

``Connectors.from_config`` wires every adapter for either live HTTP access
or offline scenario playback; the mapping code is shared between modes.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..config import GatewayConfig
from ..errors import ConfigError
from ..fixtures.scenario import Scenario
from .articles import ArticlesConnector
from .common import SourceChannel
from .metrics import MetricsConnector
from .pid_graph import PidGraphConnector
from .projects import ProjectsConnector
from .topics import TopicsConnector

__all__ = [
    "ArticlesConnector", "ProjectsConnector", "TopicsConnector",
    "MetricsConnector", "PidGraphConnector", "Connectors", "SourceChannel",
]


@dataclass(frozen=True)
class Connectors:
    articles: ArticlesConnector
    projects: ProjectsConnector
    topics: TopicsConnector
    metrics: MetricsConnector
    pid_graph: PidGraphConnector

    @classmethod
    def from_config(cls, config: GatewayConfig,
                    scenario: Scenario | None = None) -> "Connectors":
        if config.mode == "fixtures" and scenario is None:
            raise ConfigError("fixtures mode needs a scenario")
        playback = scenario if config.mode == "fixtures" else None

        def channel(source: str) -> SourceChannel:
            return SourceChannel(source, config.source(source), playback)

        return cls(
            articles=ArticlesConnector(channel("articles_api")),
            projects=ProjectsConnector(channel("projects_api")),
            topics=TopicsConnector(channel("topics_api")),
            metrics=MetricsConnector(channel("metrics_api")),
            pid_graph=PidGraphConnector(channel("pid_graph")),
        )
