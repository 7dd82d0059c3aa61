"""Projects source: grants and funders linked to a work."""

from __future__ import annotations

from ..models import Project
from ..pids import Doi
from .common import SourceChannel, expect_ok, load_json, upstream_parser

SOURCE = "projects_api"
SEARCH_PATH = "/search/publications"


@upstream_parser(SOURCE)
def parse_projects(body: bytes) -> tuple[Project, ...]:
    """Flatten every linked grant, deduplicated by (funder, project name)."""
    data = load_json(body)
    results = (data.get("response") or {}).get("results") or []
    seen = set()
    projects = []
    for result in results:
        for raw in (result or {}).get("projects") or []:
            funder = str(((raw or {}).get("funder") or {}).get("name") or "")
            name = str(raw.get("title") or "")
            if not funder and not name:
                continue
            key = (funder, name)
            if key in seen:
                continue
            seen.add(key)
            code = raw.get("code")
            projects.append(Project(funder=funder, project_name=name,
                                    award_number=str(code) if code else None))
    return tuple(projects)


class ProjectsConnector:
    def __init__(self, channel: SourceChannel):
        self.channel = channel

    def fetch_projects(self, doi: Doi) -> tuple[Project, ...]:
        """Grants linked to the DOI; absence of links is an empty list."""
        response = self.channel.get(
            doi.value, SEARCH_PATH, params={"doi": doi.value, "format": "json"})
        ok = expect_ok(response, source=SOURCE, key=doi.value, not_found_ok=True)
        return parse_projects(ok.body) if ok is not None else ()
