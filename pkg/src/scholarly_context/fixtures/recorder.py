"""One-time fixture capture: hit a live upstream, freeze status and bytes.

Recorded request metadata never stores credentials; key-bearing parameters
are redacted before they reach disk.
"""

from __future__ import annotations

import json
import time
from pathlib import Path

from ..config import GatewayConfig
from ..errors import ChecksumMismatch, MalformedPid, UpstreamUnavailable
from ..pids import normalize_doi, normalize_orcid
from ..transport import HttpTransport, TransportFailure, TransportTimeout
from .scenario import MANIFEST_NAME, FixtureEntry

_REDACTED_PARAMS = {"key", "api_key", "apikey", "token", "access_token"}


def _native_request(source: str, key: str, config: GatewayConfig):
    """The same request shape a connector would issue for this (source, key)."""
    from ..connectors import articles, metrics, pid_graph, projects, topics

    cfg = config.source(source)
    base = cfg.base_url.rstrip("/")
    if source == "articles_api":
        doi = normalize_doi(key)
        return ("GET", base + articles.work_path(doi),
                {"fields": articles.WORK_FIELDS}, None)
    if source == "projects_api":
        doi = normalize_doi(key)
        return ("GET", base + projects.SEARCH_PATH,
                {"doi": doi.value, "format": "json"}, None)
    if source == "topics_api":
        try:
            query = topics.orcid_topics_query(normalize_orcid(key))
        except (MalformedPid, ChecksumMismatch):
            query = topics.doi_topics_query(normalize_doi(key))
        return ("GET", base + topics.SPARQL_PATH,
                {"query": query, "format": "json"}, None)
    if source == "metrics_api":
        doi = normalize_doi(key)
        params = {"key": cfg.api_key} if cfg.api_key else {}
        return ("GET", base + metrics.metrics_path(doi), params, None)
    if source == "pid_graph":
        orcid = normalize_orcid(key)
        payload = {"query": pid_graph.PERSON_QUERY, "variables": {"id": orcid.url}}
        return ("POST", base + pid_graph.GRAPHQL_PATH, None, payload)
    raise ValueError(f"unknown source: {source!r}")


def _body_filename(source: str, key: str) -> str:
    safe = key.replace("/", "_").replace(":", "_")
    return f"{source}__{safe}.json"


def record_fixture(source: str, key: str, config: GatewayConfig,
                   scenario_dir: str | Path) -> FixtureEntry:
    """Capture one upstream response into the scenario directory.

    Creates or updates the manifest; replaces any previous recording for the
    same (source, key). Raises UpstreamUnavailable when live mode is off or
    the upstream cannot be reached.
    """
    if config.mode != "live":
        raise UpstreamUnavailable("recording requires live mode",
                                  source=source, key=key)
    method, url, params, payload = _native_request(source, key, config)
    transport = HttpTransport(timeout_s=config.source(source).timeout_s)
    try:
        if method == "POST":
            response = transport.post_json(url, payload)
        else:
            response = transport.get(url, params=params)
    except (TransportTimeout, TransportFailure) as exc:
        raise UpstreamUnavailable(str(exc), source=source, key=key) from exc

    root = Path(scenario_dir)
    root.mkdir(parents=True, exist_ok=True)
    body_file = None
    if response.body:
        body_file = _body_filename(source, key)
        (root / body_file).write_bytes(response.body)

    stored_params = {
        name: ("REDACTED" if name.lower() in _REDACTED_PARAMS else value)
        for name, value in (params or {}).items()
    }
    entry_dict = {
        "source": source,
        "key": key,
        "status": response.status,
        "body_file": body_file,
        "latency_ms": 0,
        "recorded_at": time.strftime("%Y-%m-%dT%H:%M:%SZ", time.gmtime()),
        "request": {"method": method, "url": url, "params": stored_params},
    }

    manifest_path = root / MANIFEST_NAME
    if manifest_path.is_file():
        manifest = json.loads(manifest_path.read_text())
    else:
        manifest = {"name": root.name, "entries": []}
    manifest["entries"] = [
        e for e in manifest.get("entries", [])
        if not (e.get("source") == source and e.get("key") == key)
    ]
    manifest["entries"].append(entry_dict)
    manifest_path.write_text(json.dumps(manifest, indent=2) + "\n")

    return FixtureEntry(source=source, key=key, status=response.status,
                        body=response.body)
