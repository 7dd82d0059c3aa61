"""scholarly-context: a federated gateway over scholarly metadata sources.

One query endpoint virtually integrates five upstream roles (articles,
projects, topics, metrics, PID graph), linked by persistent identifiers,
with partial-failure semantics and an offline fixture substrate.
"""

from . import facets
from .config import GatewayConfig, SourceConfig, default_config, load_config
from .errors import (ChecksumMismatch, ConfigError, InvalidRecord,
                     MalformedPid, MalformedUpstream, NotFound, PortInUse,
                     RateLimited, ScenarioInvalid, SchemaError,
                     ScholarlyContextError, SourceError, TypeMismatch,
                     UnknownColumn, UpstreamUnavailable)
from .connectors import Connectors
from .facets import (ComparisonTable, FacetFilter, apply_facets,
                     enrich_with_citations, facet_summary, load_table,
                     partition_rows, table_from_dict, table_to_dict)
from .fixtures import (FixtureEntry, Scenario, StubCluster, load_bundled,
                       load_scenario, record_fixture, serve_stub)
from .gateway import (FederatedResponse, Gateway, PersonContext, WorkContext,
                      build_paper_query, build_person_query, create_app,
                      parse_query, serve)
from .models import (ArtifactConnection, ArtifactNode, ArtifactType, Creator,
                     EmploymentRecord, Metrics, PersonRecord, Project,
                     SourceResult, Topic, WorkCore, WorkRef)
from .pids import Doi, OrcidId, OrgId, checksum_orcid, normalize_doi, normalize_orcid

__version__ = "0.1.0"

__all__ = [
    "ArtifactConnection", "ArtifactNode", "ArtifactType", "ChecksumMismatch",
    "ComparisonTable", "ConfigError", "Connectors", "Creator", "Doi",
    "EmploymentRecord", "FacetFilter", "FederatedResponse", "FixtureEntry",
    "Gateway", "GatewayConfig", "InvalidRecord", "MalformedPid",
    "MalformedUpstream", "Metrics", "NotFound", "OrcidId", "OrgId",
    "PersonContext", "PersonRecord", "PortInUse", "Project", "RateLimited",
    "ScenarioInvalid", "SchemaError", "Scenario", "ScholarlyContextError",
    "SourceConfig", "SourceError", "SourceResult", "StubCluster", "Topic",
    "TypeMismatch", "UnknownColumn", "UpstreamUnavailable", "WorkContext",
    "WorkCore", "WorkRef", "apply_facets", "build_paper_query",
    "build_person_query", "checksum_orcid", "create_app", "default_config",
    "enrich_with_citations", "facet_summary", "facets", "load_bundled",
    "load_config", "load_scenario", "load_table", "normalize_doi",
    "normalize_orcid", "parse_query", "partition_rows", "record_fixture", "serve",
    "serve_stub", "table_from_dict", "table_to_dict",
]
