"""Error types shared across the package.

Connector errors carry the source role and lookup key so the gateway can
turn them into per-source error entries without string parsing.
"""

from __future__ import annotations


class ScholarlyContextError(Exception):
    """Base class for all errors raised by this package."""


class MalformedPid(ScholarlyContextError):
    """Input does not match the identifier grammar (DOI or ORCID shape)."""


class ChecksumMismatch(ScholarlyContextError):
    """ORCID iD has the right shape but fails the ISO 7064 MOD 11-2 check."""


class InvalidRecord(ScholarlyContextError):
    """A domain value would violate one of its invariants."""


class SourceError(ScholarlyContextError):
    """Base for errors attributable to one upstream sub-request."""

    def __init__(self, message: str, *, source: str = "", key: str = ""):
        super().__init__(message)
        self.source = source
        self.key = key

    @property
    def kind(self) -> str:
        return type(self).__name__


class NotFound(SourceError):
    """The upstream has no record for the requested key."""


class UpstreamUnavailable(SourceError):
    """Network failure, timeout, or 5xx that persisted through the retry."""


class RateLimited(SourceError):
    """Upstream returned 429; never retried within a request."""


class MalformedUpstream(SourceError):
    """Upstream responded, but the payload cannot be mapped to domain types."""


class SchemaError(ScholarlyContextError):
    """Query text is not valid against the unified query schema."""


class UnknownColumn(ScholarlyContextError):
    """A facet filter targets a column the comparison table does not have."""


class TypeMismatch(ScholarlyContextError):
    """A numeric facet operator was applied to a text column."""


class ScenarioInvalid(ScholarlyContextError):
    """Scenario directory is missing its manifest or has malformed entries."""


class PortInUse(ScholarlyContextError):
    """A stub listener could not bind its port."""


class ConfigError(ScholarlyContextError):
    """Service configuration is missing or inconsistent."""
