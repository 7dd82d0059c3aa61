"""Recorded-fixture scenarios: loading, validation, and playback sequencing.

A scenario directory holds a ``manifest.json`` plus one body file per
recorded response. Playback is stateful so an entry with ``repeat: N``
serves N times and then falls through to the next entry for the same
(source, key) — enough to script flaky upstreams deterministically.
"""

from __future__ import annotations

import json
import threading
import time
from dataclasses import dataclass, replace
from importlib import resources
from pathlib import Path

from ..errors import InvalidRecord, ScenarioInvalid
from ..models import SOURCES
from ..transport import RawResponse, TransportTimeout

MANIFEST_NAME = "manifest.json"
DEFAULT_MAX_LATENCY_MS = 10_000


@dataclass(frozen=True)
class FixtureEntry:
    """One recorded upstream response for a (source, key) pair."""

    source: str
    key: str
    status: int
    body: bytes = b""
    latency_ms: int = 0
    repeat: int | None = None

    def __post_init__(self):
        if self.source not in SOURCES:
            raise InvalidRecord(f"unknown source: {self.source!r}")
        if not self.key:
            raise InvalidRecord("fixture entry needs a key")
        if not 100 <= self.status <= 599:
            raise InvalidRecord(f"implausible HTTP status: {self.status}")
        if 200 <= self.status < 300 and not self.body:
            raise InvalidRecord("2xx fixture entry needs a non-empty body")
        if self.latency_ms < 0:
            raise InvalidRecord("latency_ms must be non-negative")
        if self.repeat is not None and self.repeat < 1:
            raise InvalidRecord("repeat must be at least 1 when given")


@dataclass(frozen=True)
class LogEntry:
    source: str
    key: str
    timestamp: float


class Scenario:
    """Loaded scenario: entry lookup, playback state, and the request log."""

    def __init__(self, name: str, entries: list[FixtureEntry],
                 max_latency_ms: int = DEFAULT_MAX_LATENCY_MS):
        for entry in entries:
            if entry.latency_ms > max_latency_ms:
                raise ScenarioInvalid(
                    f"{entry.source}/{entry.key}: latency {entry.latency_ms} ms "
                    f"exceeds the {max_latency_ms} ms guard")
        self.name = name
        self.max_latency_ms = max_latency_ms
        self._sequences: dict[tuple[str, str], list[FixtureEntry]] = {}
        for entry in entries:
            self._sequences.setdefault((entry.source, entry.key), []).append(entry)
        self._served: dict[tuple[str, str], int] = {}
        self._log: list[LogEntry] = []
        self._lock = threading.RLock()

    @property
    def entries(self) -> tuple[FixtureEntry, ...]:
        return tuple(e for seq in self._sequences.values() for e in seq)

    @property
    def sources(self) -> tuple[str, ...]:
        present = {source for source, _ in self._sequences}
        return tuple(s for s in SOURCES if s in present)

    def keys_for(self, source: str) -> tuple[str, ...]:
        return tuple(key for src, key in self._sequences if src == source)

    def fetch(self, source: str, key: str,
              timeout_s: float | None = None) -> RawResponse:
        """Play back the next recorded response for (source, key).

        Injected latency is honored; when it exceeds ``timeout_s`` the call
        behaves like a live timeout. Unmatched keys yield a 404.
        """
        with self._lock:
            self._log.append(LogEntry(source, key, time.time()))
            entry = self._advance(source, key)
        if entry is None:
            return RawResponse(404, b"")
        delay = entry.latency_ms / 1000.0
        if timeout_s is not None and delay > timeout_s:
            time.sleep(timeout_s)
            raise TransportTimeout(
                f"{source}/{key}: no response within {timeout_s:g}s")
        if delay:
            time.sleep(delay)
        return RawResponse(entry.status, entry.body)

    def _advance(self, source: str, key: str) -> FixtureEntry | None:
        sequence = self._sequences.get((source, key))
        if not sequence:
            return None
        consumed = self._served.get((source, key), 0)
        for entry in sequence:
            if entry.repeat is None:
                return entry
            if consumed < entry.repeat:
                self._served[(source, key)] = consumed + 1
                return entry
            consumed -= entry.repeat
        return None

    @property
    def request_log(self) -> tuple[LogEntry, ...]:
        with self._lock:
            return tuple(self._log)

    def reset(self) -> None:
        """Clear playback counters and the request log."""
        with self._lock:
            self._served.clear()
            self._log.clear()

    # --- derivation helpers for failure/latency injection in tests ---

    def with_latency(self, latency_ms: int) -> "Scenario":
        entries = [replace(e, latency_ms=latency_ms) for e in self.entries]
        return Scenario(self.name, entries, max(self.max_latency_ms, latency_ms))

    def with_entries(self, *overrides: FixtureEntry) -> "Scenario":
        """Replace every recorded entry for each override's (source, key)."""
        replaced = {(e.source, e.key) for e in overrides}
        entries = [e for e in self.entries if (e.source, e.key) not in replaced]
        entries.extend(overrides)
        max_latency = max([self.max_latency_ms] + [e.latency_ms for e in overrides])
        return Scenario(self.name, entries, max_latency)

    def without_source(self, source: str) -> "Scenario":
        entries = [e for e in self.entries if e.source != source]
        return Scenario(self.name, entries, self.max_latency_ms)

    def merged_with(self, *others: "Scenario") -> "Scenario":
        entries = list(self.entries)
        max_latency = self.max_latency_ms
        for other in others:
            entries.extend(other.entries)
            max_latency = max(max_latency, other.max_latency_ms)
        return Scenario(self.name, entries, max_latency)


def load_scenario(path: str | Path) -> Scenario:
    """Load and validate a scenario directory; raises ScenarioInvalid."""
    root = Path(path)
    manifest_path = root / MANIFEST_NAME
    if not manifest_path.is_file():
        raise ScenarioInvalid(f"no {MANIFEST_NAME} in {root}")
    try:
        manifest = json.loads(manifest_path.read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise ScenarioInvalid(f"unreadable manifest in {root}: {exc}") from exc

    raw_entries = manifest.get("entries")
    if not isinstance(raw_entries, list) or not raw_entries:
        raise ScenarioInvalid(f"manifest in {root} lists no entries")

    entries = []
    for item in raw_entries:
        if not isinstance(item, dict):
            raise ScenarioInvalid(f"malformed entry in {root}: {item!r}")
        body = b""
        body_file = item.get("body_file")
        if body_file:
            body_path = root / body_file
            if not body_path.is_file():
                raise ScenarioInvalid(f"missing body file: {body_path}")
            body = body_path.read_bytes()
        try:
            entries.append(FixtureEntry(
                source=item.get("source", ""),
                key=item.get("key", ""),
                status=int(item.get("status", 0)),
                body=body,
                latency_ms=int(item.get("latency_ms", 0)),
                repeat=item.get("repeat"),
            ))
        except (InvalidRecord, TypeError, ValueError) as exc:
            raise ScenarioInvalid(f"malformed entry in {root}: {exc}") from exc

    name = manifest.get("name") or root.name
    max_latency = int(manifest.get("max_latency_ms", DEFAULT_MAX_LATENCY_MS))
    return Scenario(name, entries, max_latency)


def bundled_scenario_dir() -> Path:
    return Path(str(resources.files("scholarly_context") / "scenarios"))


def load_bundled(name: str) -> Scenario:
    """Load one of the scenarios shipped with the package."""
    return load_scenario(bundled_scenario_dir() / name)
