"""Response shaping: merged contexts → JSON in the query's own vocabulary.

Output keys follow the selection order of the query text, which makes
envelope serialization deterministic for a fixed query and scenario.
"""

from __future__ import annotations

from ..models import (ArtifactConnection, ArtifactNode, Creator,
                      EmploymentRecord, Metrics, Project, WorkRef)
from .planner import QueryPlan
from .queries import Field
from .results import FederatedResponse, PersonContext, WorkContext


def _work_ref(ref: WorkRef, selection: tuple[Field, ...]) -> dict:
    out = {}
    for node in selection:
        if node.name == "title":
            out["title"] = ref.title
        elif node.name == "doi":
            out["doi"] = ref.doi.value if ref.doi else None
    return out


def _project(project: Project, selection: tuple[Field, ...]) -> dict:
    out = {}
    for node in selection:
        if node.name == "funder":
            out["funder"] = project.funder or None
        elif node.name == "project":
            out["project"] = project.project_name or None
    return out


def _metrics(metrics: Metrics, selection: tuple[Field, ...]) -> dict:
    out = {}
    for node in selection:
        if node.name == "url":
            out["url"] = metrics.details_url
        elif node.name == "image":
            out["image"] = metrics.badge_image_url
        elif node.name == "score":
            out["score"] = metrics.score
    return out


def _paper_field(context: WorkContext, node: Field):
    core = context.core
    if node.name == "doi":
        return core.doi.value
    if node.name == "title":
        return core.title
    if node.name == "abstract":
        return core.abstract
    if node.name == "citations":
        return [_work_ref(r, node.selections) for r in core.citations]
    if node.name == "references":
        return [_work_ref(r, node.selections) for r in core.references]
    if node.name == "project":
        if context.projects is None:
            return None
        return [_project(p, node.selections) for p in context.projects]
    if node.name == "topicDetails":
        if context.topics is None:
            return None
        return [{"topic": t.label} for t in context.topics]
    if node.name == "metricsInformation":
        if context.metrics is None:
            return None
        return _metrics(context.metrics, node.selections)
    raise AssertionError(f"unshaped paper field {node.name}")


def _creator(creator: Creator, selection: tuple[Field, ...]) -> dict:
    out = {}
    for node in selection:
        if node.name == "givenName":
            out["givenName"] = creator.given_name or None
        elif node.name == "familyName":
            out["familyName"] = creator.family_name or None
        elif node.name == "id":
            out["id"] = creator.id.value if creator.id else None
    return out


def _funding(project: Project, selection: tuple[Field, ...]) -> dict:
    out = {}
    for node in selection:
        if node.name == "funderName":
            out["funderName"] = project.funder or None
        elif node.name == "awardTitle":
            out["awardTitle"] = project.project_name or None
        elif node.name == "awardNumber":
            out["awardNumber"] = project.award_number
    return out


def _artifact_node(node_value: ArtifactNode, selection: tuple[Field, ...]) -> dict:
    out = {}
    for node in selection:
        if node.name == "id":
            out["id"] = node_value.id
        elif node.name == "type":
            out["type"] = node_value.artifact_type.value
        elif node.name == "titles":
            out["titles"] = [{"title": t} for t in node_value.titles]
        elif node.name == "creators":
            out["creators"] = [_creator(c, node.selections)
                               for c in node_value.creators]
        elif node.name == "fundingReferences":
            out["fundingReferences"] = [_funding(p, node.selections)
                                        for p in node_value.funding]
    return out


def _connection(conn: ArtifactConnection, selection: tuple[Field, ...]) -> dict:
    out = {}
    for node in selection:
        if node.name == "totalCount":
            out["totalCount"] = conn.total_count
        elif node.name == "nodes":
            out["nodes"] = [_artifact_node(n, node.selections) for n in conn.nodes]
    return out


def _employment(record: EmploymentRecord, selection: tuple[Field, ...]) -> dict:
    out = {}
    for node in selection:
        if node.name == "organizationName":
            out["organizationName"] = record.organization_name
        elif node.name == "organizationId":
            out["organizationId"] = (record.organization_id.value
                                     if record.organization_id else None)
        elif node.name == "startDate":
            out["startDate"] = record.start_date
        elif node.name == "endDate":
            out["endDate"] = record.end_date
    return out


def _person_field(context: PersonContext, node: Field):
    if node.name == "id":
        return context.orcid.value
    if node.name == "name":
        return context.name
    if node.name == "employment":
        return [_employment(e, node.selections) for e in context.employment]
    if node.name == "publications":
        return _connection(context.publications, node.selections)
    if node.name == "datasets":
        return _connection(context.datasets, node.selections)
    if node.name == "softwares":
        return _connection(context.softwares, node.selections)
    if node.name == "topics":
        if context.topics is None:
            return None
        return [t.label for t in context.topics]
    raise AssertionError(f"unshaped person field {node.name}")


def shape_data(plan: QueryPlan, data) -> dict | None:
    """Project merged data onto the query's selection, or None on root failure."""
    if data is None:
        return None
    if plan.root == "comparison_citations":
        return {doi.value: count for doi, count in data.items()}
    assert plan.query is not None
    resolve = _paper_field if plan.root == "paper" else _person_field
    shaped = {}
    for node in plan.query.selection:
        shaped[node.name] = resolve(data, node)
    return {plan.root: shaped}


def envelope_dict(plan: QueryPlan, response: FederatedResponse,
                  include_timing: bool = True) -> dict:
    """The service wire format: {data, errors, timing}."""
    envelope = {
        "data": shape_data(plan, response.data),
        "errors": [e.to_dict() for e in response.errors],
    }
    if include_timing:
        envelope["timing"] = response.timing_dict()
    return envelope
