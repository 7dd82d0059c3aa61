"""HTTP transport with the shared retry policy.

The same retry loop wraps live HTTP calls and fixture playback, so a flaky
upstream recorded as "500 once, then 200" behaves identically in both modes.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass
from typing import Callable, NamedTuple

import requests


class RawResponse(NamedTuple):
    status: int
    body: bytes


class TransportTimeout(Exception):
    """The upstream did not answer within the configured per-source timeout."""


class TransportFailure(Exception):
    """Connection-level failure (refused, reset, DNS)."""


@dataclass(frozen=True)
class RetryPolicy:
    """One retry on timeout/5xx by default; 429 is never retried."""

    retries: int = 1
    backoff_ms: float = 200.0
    jitter: float = 0.5

    def backoff_s(self) -> float:
        return self.backoff_ms * (1.0 + random.uniform(0.0, self.jitter)) / 1000.0


def fetch_with_retry(
    once: Callable[[], RawResponse],
    policy: RetryPolicy,
    sleep: Callable[[float], None] = time.sleep,
) -> RawResponse:
    """Run one request attempt, retrying on timeout, connection failure, or 5xx.

    Returns the final response even if it is still a 5xx after the last
    retry; callers map statuses to typed errors.
    """
    attempts = policy.retries + 1
    for attempt in range(attempts):
        last = attempt == attempts - 1
        try:
            response = once()
        except (TransportTimeout, TransportFailure):
            if last:
                raise
            sleep(policy.backoff_s())
            continue
        if response.status >= 500 and not last:
            sleep(policy.backoff_s())
            continue
        return response
    raise AssertionError("unreachable")


class HttpTransport:
    """Thin requests wrapper producing RawResponse and transport errors."""

    def __init__(self, timeout_s: float = 5.0):
        self.timeout_s = timeout_s

    def get(self, url: str, params: dict | None = None,
            headers: dict | None = None) -> RawResponse:
        return self._run(lambda: requests.get(
            url, params=params, headers=headers, timeout=self.timeout_s))

    def post_json(self, url: str, payload: dict,
                  headers: dict | None = None) -> RawResponse:
        return self._run(lambda: requests.post(
            url, json=payload, headers=headers, timeout=self.timeout_s))

    @staticmethod
    def _run(call: Callable[[], requests.Response]) -> RawResponse:
        try:
            response = call()
        except requests.Timeout as exc:
            raise TransportTimeout(str(exc)) from exc
        except requests.RequestException as exc:
            raise TransportFailure(str(exc)) from exc
        return RawResponse(response.status_code, response.content)
