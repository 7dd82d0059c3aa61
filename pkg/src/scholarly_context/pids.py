"""Persistent identifiers: validation and canonical forms.

DOIs and ORCID iDs are the join keys for every cross-source lookup, so a
single canonical form matters more than leniency: lowercase bare DOIs,
hyphenated ORCID iDs with an uppercase check character.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .errors import ChecksumMismatch, MalformedPid

_DOI_RE = re.compile(r"^10\.\d+/\S+$")
_ORCID_RE = re.compile(r"^\d{4}-\d{4}-\d{4}-\d{3}[\dX]$")

_DOI_PREFIXES = (
    "doi:",
    "https://doi.org/",
    "http://doi.org/",
    "https://dx.doi.org/",
    "http://dx.doi.org/",
)
_ORCID_PREFIXES = (
    "https://orcid.org/",
    "http://orcid.org/",
    "orcid.org/",
)


@dataclass(frozen=True)
class Doi:
    """Canonical DOI: lowercase, no resolver prefix, form ``10.<registrant>/<suffix>``."""

    value: str

    def __post_init__(self):
        if not _DOI_RE.match(self.value) or self.value != self.value.lower():
            raise MalformedPid(f"not a canonical DOI: {self.value!r}")

    def __str__(self) -> str:
        return self.value

    @property
    def url(self) -> str:
        return f"https://doi.org/{self.value}"


@dataclass(frozen=True)
class OrcidId:
    """Canonical ORCID iD: four hyphenated groups, checksum-verified."""

    value: str

    def __post_init__(self):
        if not _ORCID_RE.match(self.value):
            raise MalformedPid(f"not a canonical ORCID iD: {self.value!r}")
        digits = self.value.replace("-", "")[:15]
        if checksum_orcid(digits) != self.value[-1]:
            raise ChecksumMismatch(f"ORCID check character mismatch: {self.value}")

    def __str__(self) -> str:
        return self.value

    @property
    def url(self) -> str:
        return f"https://orcid.org/{self.value}"


@dataclass(frozen=True)
class OrgId:
    """Opaque organization PID (e.g. a ROR URL), carried verbatim."""

    value: str

    def __post_init__(self):
        if not self.value:
            raise MalformedPid("organization id must be non-empty")

    def __str__(self) -> str:
        return self.value


def normalize_doi(raw: str) -> Doi:
    """Canonicalize any user- or upstream-supplied DOI string.

    Accepts bare DOIs, ``doi:`` prefixes, and doi.org / dx.doi.org resolver
    URLs in any case, with surrounding whitespace. Raises MalformedPid when
    the residue does not match the DOI grammar.
    """
    text = raw.strip()
    lowered = text.lower()
    for prefix in _DOI_PREFIXES:
        if lowered.startswith(prefix):
            text = text[len(prefix):]
            lowered = lowered[len(prefix):]
            break
    candidate = lowered.strip()
    if not _DOI_RE.match(candidate):
        raise MalformedPid(f"not a DOI: {raw!r}")
    return Doi(candidate)


def normalize_orcid(raw: str) -> OrcidId:
    """Canonicalize a bare ORCID iD or an orcid.org URL.

    The check character is uppercased; the ISO 7064 MOD 11-2 checksum is
    verified. Raises MalformedPid on shape violations and ChecksumMismatch
    when the shape is fine but the check character is wrong.
    """
    text = raw.strip()
    lowered = text.lower()
    for prefix in _ORCID_PREFIXES:
        if lowered.startswith(prefix):
            text = text[len(prefix):]
            break
    candidate = text.strip()
    if candidate and candidate[-1] in ("x", "X"):
        candidate = candidate[:-1] + "X"
    if not _ORCID_RE.match(candidate):
        raise MalformedPid(f"not an ORCID iD: {raw!r}")
    return OrcidId(candidate)


def checksum_orcid(digits: str) -> str:
    """ISO 7064 MOD 11-2 check character for the 15 leading ORCID digits.

    Returns a single character in ``0``-``9`` or ``X``.
    """
    if len(digits) != 15 or not digits.isdigit():
        raise MalformedPid(f"expected exactly 15 decimal digits, got {digits!r}")
    total = 0
    for ch in digits:
        total = (total + int(ch)) * 2
    result = (12 - total % 11) % 11
    return "X" if result == 10 else str(result)
