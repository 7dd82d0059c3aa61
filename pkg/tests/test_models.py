"""Domain-type invariants: a constructed value is a valid value."""

import pytest

from scholarly_context.errors import InvalidRecord
from scholarly_context.models import (ArtifactConnection, ArtifactNode,
                                      ArtifactType, Creator, EmploymentRecord,
                                      Metrics, Project, SourceResult, Topic,
                                      WorkCore, WorkRef, sort_employment)
from scholarly_context.pids import Doi

DOI = Doi("10.1101/2020.03.08.20030643")


def test_work_ref_needs_title():
    with pytest.raises(InvalidRecord):
        WorkRef(title="")


def test_work_core_count_must_cover_list():
    refs = (WorkRef("a"), WorkRef("b"))
    ok = WorkCore(doi=DOI, title="t", citations=refs, citation_count=2)
    assert ok.citation_count == 2
    WorkCore(doi=DOI, title="t", citations=refs, citation_count=10)  # truncated list
    with pytest.raises(InvalidRecord):
        WorkCore(doi=DOI, title="t", citations=refs, citation_count=1)
    with pytest.raises(InvalidRecord):
        WorkCore(doi=DOI, title="t", citation_count=-1)
    with pytest.raises(InvalidRecord):
        WorkCore(doi=DOI, title="")


def test_project_needs_funder_or_name():
    assert Project(funder="EC").funder == "EC"
    assert Project(project_name="X").project_name == "X"
    with pytest.raises(InvalidRecord):
        Project()


def test_topic_label():
    with pytest.raises(InvalidRecord):
        Topic(label="")


def test_metrics_urls_must_be_absolute():
    Metrics(details_url="https://a.example/d", badge_image_url="http://b.example/i")
    with pytest.raises(InvalidRecord):
        Metrics(details_url="/relative", badge_image_url="https://b.example/i")
    with pytest.raises(InvalidRecord):
        Metrics(details_url="https://a.example/d", badge_image_url="not a url")
    with pytest.raises(InvalidRecord):
        Metrics(details_url="https://a.example/d",
                badge_image_url="https://b.example/i", score=-1)


class TestEmployment:
    def test_dates_validated(self):
        EmploymentRecord(organization_name="Org", start_date="2018",
                         end_date="2020-06")
        with pytest.raises(InvalidRecord):
            EmploymentRecord(organization_name="Org", start_date="June 2018")
        with pytest.raises(InvalidRecord):
            EmploymentRecord(organization_name="")

    def test_full_dates_must_be_ordered(self):
        with pytest.raises(InvalidRecord):
            EmploymentRecord(organization_name="Org", start_date="2020-01-02",
                             end_date="2019-01-01")
        # partial precision is carried as-is, no ordering check possible
        EmploymentRecord(organization_name="Org", start_date="2020",
                         end_date="2019")

    def test_current_means_no_end(self):
        assert EmploymentRecord(organization_name="Org").is_current
        assert not EmploymentRecord(organization_name="Org",
                                    end_date="2020").is_current

    def test_sort_most_recent_first_undated_last(self):
        older = EmploymentRecord(organization_name="older", start_date="2013-09-01",
                                 end_date="2018-08-31")
        newer = EmploymentRecord(organization_name="newer", start_date="2018-09-01")
        undated = EmploymentRecord(organization_name="undated")
        year_only = EmploymentRecord(organization_name="year", start_date="2015")
        ordered = sort_employment([undated, older, year_only, newer])
        assert [r.organization_name for r in ordered] == \
            ["newer", "year", "older", "undated"]

    def test_current_wins_ties(self):
        ended = EmploymentRecord(organization_name="ended", start_date="2018-09-01",
                                 end_date="2020-01-01")
        current = EmploymentRecord(organization_name="current",
                                   start_date="2018-09-01")
        assert sort_employment([ended, current])[0].organization_name == "current"


def test_creator_needs_some_name():
    with pytest.raises(InvalidRecord):
        Creator()
    assert Creator(family_name="Braukmann").family_name == "Braukmann"


def test_artifact_node_titles_required_for_known_types():
    with pytest.raises(InvalidRecord):
        ArtifactNode(id="pid", artifact_type=ArtifactType.dataset)
    ArtifactNode(id="pid", artifact_type=ArtifactType.other)
    with pytest.raises(InvalidRecord):
        ArtifactNode(id="", artifact_type=ArtifactType.other)


def test_connection_total_covers_nodes():
    node = ArtifactNode(id="pid", artifact_type=ArtifactType.other)
    ArtifactConnection(total_count=5, nodes=(node,))
    with pytest.raises(InvalidRecord):
        ArtifactConnection(total_count=0, nodes=(node,))
    with pytest.raises(InvalidRecord):
        ArtifactConnection(total_count=-1)


def test_source_result_source_vocabulary():
    SourceResult(source="articles_api", key="k", payload=None, fetched_at=0.0)
    with pytest.raises(InvalidRecord):
        SourceResult(source="nope", key="k", payload=None, fetched_at=0.0)
