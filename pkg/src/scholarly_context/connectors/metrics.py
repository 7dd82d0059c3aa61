"""Metrics source: online-attention score, badge, and details page."""

from __future__ import annotations

from ..models import Metrics
from ..pids import Doi
from .common import SourceChannel, expect_ok, load_json, upstream_parser

SOURCE = "metrics_api"


def metrics_path(doi: Doi) -> str:
    return f"/v1/doi/{doi.value}"


@upstream_parser(SOURCE)
def parse_metrics(body: bytes) -> Metrics:
    data = load_json(body)
    details = data.get("details_url")
    if not details:
        raise KeyError("details_url")
    images = data.get("images") or {}
    badge = images.get("medium") or images.get("small") or images.get("large")
    if not badge:
        raise KeyError("images")
    score = data.get("score")
    return Metrics(details_url=str(details), badge_image_url=str(badge),
                   score=float(score) if score is not None else None)


class MetricsConnector:
    def __init__(self, channel: SourceChannel):
        self.channel = channel

    def fetch_metrics(self, doi: Doi) -> Metrics | None:
        """Attention data when the source tracks the DOI, else None.

        A 429 surfaces as RateLimited so the gateway can degrade just this
        group instead of failing the response.
        """
        params = {}
        if self.channel.cfg.api_key:
            params["key"] = self.channel.cfg.api_key
        response = self.channel.get(doi.value, metrics_path(doi),
                                    params=params or None)
        ok = expect_ok(response, source=SOURCE, key=doi.value, not_found_ok=True)
        return parse_metrics(ok.body) if ok is not None else None
