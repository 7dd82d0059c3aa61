"""Stub upstream servers: one HTTP listener per source role.

Each listener mimics its upstream's native request shape, answers from the
scenario's recorded entries, and appends every request to the shared log.
Connectors pointed at a stub's base URL cannot tell it from the real
service.
"""

from __future__ import annotations

import json
import re
import threading
from http.server import BaseHTTPRequestHandler, ThreadingHTTPServer
from urllib.parse import parse_qs, unquote, urlparse

from ..errors import PortInUse
from ..models import SOURCES
from .scenario import Scenario

_DOI_IN_QUOTES = re.compile(r'"(10\.\d+/[^"\s]+)"')
_ORCID_IN_QUOTES = re.compile(r'"(\d{4}-\d{4}-\d{4}-\d{3}[\dX])"')
_ORCID_ANYWHERE = re.compile(r"(\d{4}-\d{4}-\d{4}-\d{3}[\dX])")


def extract_key(source: str, method: str, path: str, body: bytes) -> str | None:
    """Pull the lookup key out of a native-shaped request for one source."""
    parsed = urlparse(path)
    query = parse_qs(parsed.query)
    if source == "articles_api":
        marker = "/paper/DOI:"
        if marker in parsed.path:
            return unquote(parsed.path.split(marker, 1)[1]).lower()
        return None
    if source == "projects_api":
        values = query.get("doi")
        return values[0].lower() if values else None
    if source == "topics_api":
        sparql = (query.get("query") or [""])[0]
        doi = _DOI_IN_QUOTES.search(sparql)
        if doi:
            return doi.group(1).lower()
        orcid = _ORCID_IN_QUOTES.search(sparql)
        return orcid.group(1) if orcid else None
    if source == "metrics_api":
        marker = "/doi/"
        if marker in parsed.path:
            return unquote(parsed.path.split(marker, 1)[1]).lower()
        return None
    if source == "pid_graph":
        if method != "POST":
            return None
        try:
            payload = json.loads(body or b"{}")
        except json.JSONDecodeError:
            return None
        candidate = str((payload.get("variables") or {}).get("id", ""))
        if not candidate:
            candidate = str(payload.get("query", ""))
        match = _ORCID_ANYWHERE.search(candidate)
        return match.group(1) if match else None
    return None


def _make_handler(cluster: "StubCluster", source: str):
    class Handler(BaseHTTPRequestHandler):
        def log_message(self, *args):  # keep test output clean
            pass

        def _serve(self, method: str):
            if urlparse(self.path).path == "/_log":
                self._reply(200, cluster.log_json(source))
                return
            length = int(self.headers.get("Content-Length") or 0)
            body = self.rfile.read(length) if length else b""
            key = extract_key(source, method, self.path, body)
            if key is None:
                self._reply(404, b"")
                return
            response = cluster.scenario.fetch(source, key)
            self._reply(response.status, response.body)

        def _reply(self, status: int, body: bytes):
            self.send_response(status)
            self.send_header("Content-Type", "application/json")
            self.send_header("Content-Length", str(len(body)))
            self.end_headers()
            if body:
                self.wfile.write(body)

        def do_GET(self):
            self._serve("GET")

        def do_POST(self):
            self._serve("POST")

    return Handler


class StubCluster:
    """One stub HTTP server per source role, answering from a scenario."""

    def __init__(self, scenario: Scenario, host: str = "127.0.0.1",
                 ports: dict[str, int] | None = None):
        self.scenario = scenario
        self.host = host
        self._requested_ports = ports or {}
        self._servers: dict[str, ThreadingHTTPServer] = {}
        self._threads: dict[str, threading.Thread] = {}

    def start(self) -> "StubCluster":
        for source in SOURCES:
            port = self._requested_ports.get(source, 0)
            try:
                server = ThreadingHTTPServer(
                    (self.host, port), _make_handler(self, source))
            except OSError as exc:
                self.stop()
                raise PortInUse(f"cannot bind {source} stub on port {port}: {exc}") from exc
            server.daemon_threads = True
            thread = threading.Thread(
                target=server.serve_forever, name=f"stub-{source}", daemon=True)
            thread.start()
            self._servers[source] = server
            self._threads[source] = thread
        return self

    @property
    def base_urls(self) -> dict[str, str]:
        return {source: f"http://{self.host}:{server.server_address[1]}"
                for source, server in self._servers.items()}

    def log_json(self, source: str | None = None) -> bytes:
        entries = [
            {"source": e.source, "key": e.key, "timestamp": e.timestamp}
            for e in self.scenario.request_log
            if source is None or e.source == source
        ]
        return json.dumps({"requests": entries}).encode()

    def stop(self, source: str | None = None) -> None:
        """Stop one stub (to simulate a dead upstream) or the whole cluster."""
        targets = [source] if source else list(self._servers)
        for name in targets:
            server = self._servers.pop(name, None)
            if server is not None:
                server.shutdown()
                server.server_close()
            self._threads.pop(name, None)

    def __enter__(self) -> "StubCluster":
        return self.start()

    def __exit__(self, *exc) -> None:
        self.stop()


def serve_stub(scenario: Scenario, host: str = "127.0.0.1",
               ports: dict[str, int] | None = None) -> StubCluster:
    """Start stub listeners for every source role and return the cluster."""
    return StubCluster(scenario, host=host, ports=ports).start()
