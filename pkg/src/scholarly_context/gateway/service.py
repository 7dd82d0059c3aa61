"""HTTP face of the gateway: /query, /health, /comparison/filter."""

from __future__ import annotations

from fastapi import FastAPI
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse
from pydantic import BaseModel

from ..config import GatewayConfig
from ..errors import (ChecksumMismatch, InvalidRecord, MalformedPid,
                      SchemaError, TypeMismatch, UnknownColumn)
from ..facets import (apply_facets, enrich_with_citations, facet_summary,
                      filters_from_list, partition_rows, table_from_dict,
                      table_to_dict)
from ..fixtures.scenario import Scenario
from ..transport import HttpTransport, TransportFailure, TransportTimeout
from .core import Gateway
from .planner import plan_query
from .queries import parse_query
from .wire import envelope_dict


class QueryBody(BaseModel):
    query: str
    variables: dict | None = None


class ComparisonBody(BaseModel):
    table: dict
    filters: list = []


def _bad_request(kind: str, message: str) -> JSONResponse:
    return JSONResponse(status_code=400,
                        content={"data": None,
                                 "errors": [{"kind": kind, "message": message}]})


def create_app(config: GatewayConfig, scenario: Scenario | None = None,
               gateway: Gateway | None = None) -> FastAPI:
    gateway = gateway or Gateway(config, scenario=scenario)
    app = FastAPI(title="scholarly-context gateway")
    app.state.gateway = gateway
    app.add_middleware(
        CORSMiddleware,
        allow_origins=list(config.cors_origins),
        allow_methods=["*"],
        allow_headers=["*"],
    )

    @app.post("/query")
    def run_query(body: QueryBody):
        try:
            parsed = parse_query(body.query, body.variables)
            plan = plan_query(parsed)
        except (SchemaError, MalformedPid, ChecksumMismatch) as exc:
            return _bad_request(type(exc).__name__, str(exc))
        response = gateway.execute(plan)
        return JSONResponse(envelope_dict(plan, response))

    @app.get("/health")
    def health():
        upstreams = {}
        if gateway.scenario is not None:
            configured = set(gateway.scenario.sources)
            for source in config.sources:
                upstreams[source] = {"reachable": source in configured}
        else:
            probe = HttpTransport(timeout_s=1.0)
            for source, source_cfg in config.sources.items():
                try:
                    probe.get(source_cfg.base_url)
                    upstreams[source] = {"reachable": True}
                except (TransportTimeout, TransportFailure):
                    upstreams[source] = {"reachable": False}
        return {"status": "ok", "mode": config.mode, "upstreams": upstreams}

    @app.post("/comparison/filter")
    def filter_comparison(body: ComparisonBody):
        try:
            table = table_from_dict(body.table)
            filters = filters_from_list(body.filters)
        except (InvalidRecord, MalformedPid) as exc:
            return _bad_request(type(exc).__name__, str(exc))

        def fetch_counts(dois):
            counts = gateway.query_citation_counts(dois)
            return counts.data or {}

        enriched = enrich_with_citations(table, fetch_counts)
        try:
            kept, dropped, unknown = partition_rows(enriched, filters)
            filtered = apply_facets(enriched, filters)
        except (UnknownColumn, TypeMismatch) as exc:
            return _bad_request(type(exc).__name__, str(exc))
        return {
            "table": table_to_dict(filtered),
            "summary": {"kept": len(kept), "dropped": len(dropped),
                        "unknown": len(unknown)},
            "bounds": facet_summary(enriched),
        }

    return app


def serve(config: GatewayConfig, scenario: Scenario | None = None,
          host: str = "127.0.0.1") -> None:
    """Run the gateway service until interrupted."""
    import uvicorn

    app = create_app(config, scenario=scenario)
    uvicorn.run(app, host=host, port=config.port, log_level="warning")
