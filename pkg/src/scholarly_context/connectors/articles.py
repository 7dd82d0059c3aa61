"""Articles source: work metadata, citation/reference lists, citation counts."""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor

from ..errors import MalformedPid, SourceError, UpstreamUnavailable
from ..models import WorkCore, WorkRef
from ..pids import Doi, normalize_doi
from .common import SourceChannel, expect_ok, load_json, upstream_parser

SOURCE = "articles_api"

WORK_FIELDS = ("title,abstract,citationCount,"
               "citations.title,citations.externalIds,"
               "references.title,references.externalIds")
COUNT_FIELDS = "citationCount"


def work_path(doi: Doi) -> str:
    return f"/graph/v1/paper/DOI:{doi.value}"


def _refs(items) -> tuple[WorkRef, ...]:
    refs = []
    for item in items or []:
        title = (item or {}).get("title")
        if not title:
            continue  # untitled stubs are upstream noise; counts stay authoritative
        raw_doi = ((item.get("externalIds") or {}).get("DOI"))
        doi = None
        if raw_doi:
            try:
                doi = normalize_doi(str(raw_doi))
            except MalformedPid:
                doi = None
        refs.append(WorkRef(title=str(title), doi=doi))
    return tuple(refs)


@upstream_parser(SOURCE)
def parse_work_core(doi: Doi, body: bytes) -> WorkCore:
    """Map a native work payload onto WorkCore, preserving list order."""
    data = load_json(body)
    title = data.get("title")
    if not title:
        raise KeyError("title")
    abstract = data.get("abstract") or None
    count = data.get("citationCount")
    return WorkCore(
        doi=doi,
        title=str(title),
        abstract=str(abstract) if abstract else None,
        citations=_refs(data.get("citations")),
        references=_refs(data.get("references")),
        citation_count=int(count) if count is not None else None,
    )


@upstream_parser(SOURCE)
def parse_citation_count(body: bytes) -> int | None:
    count = load_json(body).get("citationCount")
    return int(count) if count is not None else None


class ArticlesConnector:
    def __init__(self, channel: SourceChannel):
        self.channel = channel

    def fetch_work_core(self, doi: Doi) -> WorkCore:
        response = self.channel.get(doi.value, work_path(doi),
                                    params={"fields": WORK_FIELDS})
        ok = expect_ok(response, source=SOURCE, key=doi.value)
        return parse_work_core(doi, ok.body)

    def fetch_citation_count(self, doi: Doi) -> int | None:
        response = self.channel.get(doi.value, work_path(doi),
                                    params={"fields": COUNT_FIELDS})
        ok = expect_ok(response, source=SOURCE, key=doi.value, not_found_ok=True)
        return parse_citation_count(ok.body) if ok is not None else None

    def fetch_citation_counts(self, dois: list[Doi],
                              concurrency_cap: int = 8) -> dict[Doi, int | None]:
        """Concurrent count lookups: one entry per input DOI, absent on misses.

        Individual failures degrade to absent; only a complete wipeout is an
        UpstreamUnavailable.
        """
        if not dois:
            raise ValueError("fetch_citation_counts needs at least one DOI")
        results: dict[Doi, int | None] = {}
        failures = 0
        with ThreadPoolExecutor(max_workers=min(concurrency_cap, len(dois))) as pool:
            futures = {doi: pool.submit(self.fetch_citation_count, doi)
                       for doi in dict.fromkeys(dois)}
            for doi, future in futures.items():
                try:
                    results[doi] = future.result()
                except SourceError:
                    failures += 1
                    results[doi] = None
        if failures == len(futures):
            raise UpstreamUnavailable(
                "every citation-count lookup failed", source=SOURCE)
        return {doi: results[doi] for doi in dois}
