"""Federated query gateway: parse, plan, execute, merge, cache, serve."""

from .cache import TtlCache
from .core import Gateway
from .planner import QueryPlan, SubRequest, plan_citation_counts, plan_query
from .queries import (ParsedQuery, build_paper_query, build_person_query,
                      parse_query)
from .results import (FederatedResponse, PersonContext, SourceTiming,
                      SubError, WorkContext)
from .service import create_app, serve
from .wire import envelope_dict, shape_data

__all__ = [
    "FederatedResponse", "Gateway", "ParsedQuery", "PersonContext",
    "QueryPlan", "SourceTiming", "SubError", "SubRequest", "TtlCache",
    "WorkContext", "build_paper_query", "build_person_query", "create_app",
    "envelope_dict", "parse_query", "plan_citation_counts", "plan_query",
    "serve", "shape_data",
]
