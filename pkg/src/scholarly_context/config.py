"""Service configuration: defaults, config file, environment overrides.

Precedence is environment > file > defaults. Only the documented key set is
accepted; unknown keys in the file are a ConfigError so typos fail loudly.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass, field, replace
from pathlib import Path

from .errors import ConfigError
from .models import SOURCES

ENV_PREFIX = "SCHOLARLY_CTX_"
METRICS_KEY_ENV = "METRICS_API_KEY"

DEFAULT_BASE_URLS = {
    "articles_api": "https://api.semanticscholar.org",
    "projects_api": "https://api.openaire.eu",
    "topics_api": "https://query.wikidata.org",
    "metrics_api": "https://api.altmetric.com",
    "pid_graph": "https://api.datacite.org",
}

# Attention metrics are rate-limit sensitive, so they cache longer.
DEFAULT_TTL_S = {"metrics_api": 3600}

_SOURCE_KEYS = {"base_url", "timeout_ms", "ttl_s", "retry_backoff_ms"}
_TOP_KEYS = {"port", "mode", "scenario", "concurrency_cap",
             "request_deadline_ms", "cors_origins", "sources"}


@dataclass(frozen=True)
class SourceConfig:
    base_url: str
    timeout_ms: int = 5000
    ttl_s: int = 900
    retry_backoff_ms: float = 200.0
    api_key: str | None = None

    @property
    def timeout_s(self) -> float:
        return self.timeout_ms / 1000.0


@dataclass(frozen=True)
class GatewayConfig:
    mode: str = "fixtures"
    port: int = 8350
    scenario: str | None = None
    concurrency_cap: int = 8
    request_deadline_ms: int = 10_000
    cors_origins: tuple[str, ...] = ("*",)
    sources: dict[str, SourceConfig] = field(default_factory=dict)

    def source(self, name: str) -> SourceConfig:
        return self.sources[name]


def default_config(mode: str = "fixtures") -> GatewayConfig:
    sources = {
        name: SourceConfig(base_url=DEFAULT_BASE_URLS[name],
                           ttl_s=DEFAULT_TTL_S.get(name, 900))
        for name in SOURCES
    }
    return GatewayConfig(mode=mode, sources=sources)


def _apply_file(config: GatewayConfig, path: Path) -> GatewayConfig:
    try:
        raw = json.loads(path.read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise ConfigError(f"cannot read config file {path}: {exc}") from exc
    if not isinstance(raw, dict):
        raise ConfigError(f"config file {path} must hold a JSON object")

    unknown = set(raw) - _TOP_KEYS
    if unknown:
        raise ConfigError(f"unknown config keys: {sorted(unknown)}")

    sources = dict(config.sources)
    for name, overrides in (raw.get("sources") or {}).items():
        if name not in SOURCES:
            raise ConfigError(f"unknown source in config: {name!r}")
        bad = set(overrides) - _SOURCE_KEYS
        if bad:
            raise ConfigError(f"unknown keys for source {name}: {sorted(bad)}")
        sources[name] = replace(sources[name], **overrides)

    cors = raw.get("cors_origins")
    return replace(
        config,
        mode=raw.get("mode", config.mode),
        port=int(raw.get("port", config.port)),
        scenario=raw.get("scenario", config.scenario),
        concurrency_cap=int(raw.get("concurrency_cap", config.concurrency_cap)),
        request_deadline_ms=int(raw.get("request_deadline_ms",
                                        config.request_deadline_ms)),
        cors_origins=tuple(cors) if cors is not None else config.cors_origins,
        sources=sources,
    )


def _apply_env(config: GatewayConfig, env: dict) -> GatewayConfig:
    def get(name: str) -> str | None:
        return env.get(ENV_PREFIX + name)

    sources = dict(config.sources)
    for name in SOURCES:
        upper = name.upper()
        updates = {}
        if get(f"{upper}_BASE_URL"):
            updates["base_url"] = get(f"{upper}_BASE_URL")
        if get(f"{upper}_TIMEOUT_MS"):
            updates["timeout_ms"] = int(get(f"{upper}_TIMEOUT_MS"))
        if get(f"{upper}_TTL_S"):
            updates["ttl_s"] = int(get(f"{upper}_TTL_S"))
        if updates:
            sources[name] = replace(sources[name], **updates)
    if env.get(METRICS_KEY_ENV):
        sources["metrics_api"] = replace(sources["metrics_api"],
                                         api_key=env[METRICS_KEY_ENV])

    return replace(
        config,
        mode=get("MODE") or config.mode,
        port=int(get("PORT") or config.port),
        scenario=get("SCENARIO") or config.scenario,
        concurrency_cap=int(get("CONCURRENCY_CAP") or config.concurrency_cap),
        sources=sources,
    )


def validate_config(config: GatewayConfig) -> GatewayConfig:
    if config.mode not in ("live", "fixtures"):
        raise ConfigError(f"mode must be 'live' or 'fixtures', got {config.mode!r}")
    if not 0 < config.port < 65536:
        raise ConfigError(f"port out of range: {config.port}")
    if config.concurrency_cap < 1:
        raise ConfigError("concurrency_cap must be at least 1")
    return config


def load_config(path: str | Path | None = None,
                env: dict | None = None) -> GatewayConfig:
    """Assemble the effective configuration (env > file > defaults)."""
    config = default_config()
    if path is not None:
        config = _apply_file(config, Path(path))
    config = _apply_env(config, dict(os.environ) if env is None else env)
    return validate_config(config)
