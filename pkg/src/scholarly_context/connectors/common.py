"""Plumbing shared by all connectors: mode dispatch, retries, status mapping.

A SourceChannel hides whether bytes come from a live HTTP call or from
scenario playback; everything above it (request shapes, response mapping)
is identical in both modes.
"""

from __future__ import annotations

import functools
import json

from ..config import SourceConfig
from ..errors import (InvalidRecord, MalformedUpstream, NotFound, RateLimited,
                      UpstreamUnavailable)
from ..fixtures.scenario import Scenario
from ..transport import (HttpTransport, RawResponse, RetryPolicy,
                         TransportFailure, TransportTimeout, fetch_with_retry)


class SourceChannel:
    """Issues raw sub-requests for one source role, live or playback."""

    def __init__(self, source: str, cfg: SourceConfig,
                 scenario: Scenario | None = None):
        self.source = source
        self.cfg = cfg
        self.scenario = scenario
        self.policy = RetryPolicy(backoff_ms=cfg.retry_backoff_ms)
        self._transport = HttpTransport(timeout_s=cfg.timeout_s)

    def get(self, key: str, path: str, params: dict | None = None,
            headers: dict | None = None) -> RawResponse:
        if self.scenario is not None:
            once = lambda: self.scenario.fetch(self.source, key, self.cfg.timeout_s)
        else:
            url = self.cfg.base_url.rstrip("/") + path
            once = lambda: self._transport.get(url, params=params, headers=headers)
        return self._run(key, once)

    def post_json(self, key: str, path: str, payload: dict) -> RawResponse:
        if self.scenario is not None:
            once = lambda: self.scenario.fetch(self.source, key, self.cfg.timeout_s)
        else:
            url = self.cfg.base_url.rstrip("/") + path
            once = lambda: self._transport.post_json(url, payload)
        return self._run(key, once)

    def _run(self, key: str, once) -> RawResponse:
        try:
            return fetch_with_retry(once, self.policy)
        except (TransportTimeout, TransportFailure) as exc:
            raise UpstreamUnavailable(str(exc), source=self.source, key=key) from exc


def expect_ok(response: RawResponse, *, source: str, key: str,
              not_found_ok: bool = False) -> RawResponse | None:
    """Map an HTTP status to a typed error, or pass the 2xx response through.

    Returns None for a 404 when absence is normal for the source.
    """
    if 200 <= response.status < 300:
        return response
    if response.status == 404:
        if not_found_ok:
            return None
        raise NotFound(f"{source} has no record for {key}", source=source, key=key)
    if response.status == 429:
        raise RateLimited(f"{source} rate limited", source=source, key=key)
    raise UpstreamUnavailable(f"{source} answered {response.status}",
                              source=source, key=key)


def upstream_parser(source: str):
    """Turn mapping failures inside a parse function into MalformedUpstream."""
    def decorate(func):
        @functools.wraps(func)
        def wrapper(*args, **kwargs):
            try:
                return func(*args, **kwargs)
            except MalformedUpstream:
                raise
            except (json.JSONDecodeError, UnicodeDecodeError, InvalidRecord,
                    AttributeError, KeyError, TypeError, ValueError) as exc:
                raise MalformedUpstream(
                    f"{source}: cannot map response: {exc}", source=source) from exc
        return wrapper
    return decorate


def load_json(body: bytes) -> dict:
    data = json.loads(body.decode("utf-8"))
    if not isinstance(data, dict):
        raise MalformedUpstream(f"expected a JSON object, got {type(data).__name__}")
    return data
