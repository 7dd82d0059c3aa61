"""Offline test substrate: recorded scenarios, stub upstreams, capture tool."""

from .recorder import record_fixture
from .scenario import (FixtureEntry, LogEntry, Scenario, bundled_scenario_dir,
                       load_bundled, load_scenario)
from .stub import StubCluster, serve_stub

__all__ = [
    "FixtureEntry", "LogEntry", "Scenario", "StubCluster",
    "bundled_scenario_dir", "load_bundled", "load_scenario",
    "record_fixture", "serve_stub",
]
