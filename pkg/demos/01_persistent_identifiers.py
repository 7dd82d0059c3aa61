"""
Persistent identifiers: canonical forms and checksums
======================================================

DOIs and ORCID iDs are the join keys of the whole system, so every lookup
starts by canonicalizing whatever form a user pasted.
"""

from scholarly_context import checksum_orcid, normalize_doi, normalize_orcid
from scholarly_context.errors import ChecksumMismatch, MalformedPid

# Any common decoration collapses to one canonical, lowercase DOI.
forms = [
    "10.1101/2020.03.08.20030643",
    "doi:10.1101/2020.03.08.20030643",
    "HTTPS://DOI.ORG/10.1101/2020.03.08.20030643",
    "  http://dx.doi.org/10.1101/2020.03.08.20030643  ",
]
canonical = {normalize_doi(f).value for f in forms}
print("canonical DOI:", canonical)
assert canonical == {"10.1101/2020.03.08.20030643"}

# ORCID iDs carry an ISO 7064 MOD 11-2 check character; the last character
# is computed from the 15 digits before it.
orcid = normalize_orcid("https://orcid.org/0000-0001-6383-7148")
print("canonical ORCID:", orcid, "| resolver URL:", orcid.url)
assert checksum_orcid("000000016383714") == "8"

# A single flipped digit is always caught.
try:
    normalize_orcid("0000-0001-6383-7149")
except ChecksumMismatch as exc:
    print("flipped digit rejected:", exc)

# Shape violations are a different error than checksum failures.
try:
    normalize_doi("not-a-doi")
except MalformedPid as exc:
    print("grammar violation rejected:", exc)
