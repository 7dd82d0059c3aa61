"""The federated gateway: concurrent sub-query execution and merging.

Every planned sub-request runs on its own worker; outcomes are merged in
plan order so the response is identical no matter which upstream answered
first. Failed sub-requests become error entries, never exceptions — except
that a failed root lookup voids the data while keeping every error entry.
"""

from __future__ import annotations

import time
from concurrent.futures import ThreadPoolExecutor
from concurrent.futures import TimeoutError as FutureTimeout
from dataclasses import dataclass, replace

from ..config import GatewayConfig, default_config
from ..connectors import Connectors
from ..errors import ConfigError, SourceError
from ..fixtures.scenario import Scenario, load_bundled, load_scenario
from ..models import SourceResult
from ..pids import Doi, OrcidId
from .cache import TtlCache
from .planner import QueryPlan, SubRequest, plan_citation_counts, plan_query
from .queries import ParsedQuery, build_paper_query, build_person_query, parse_query
from .results import (FederatedResponse, PersonContext, SourceTiming, SubError,
                      WorkContext)


@dataclass(frozen=True)
class _Outcome:
    sub: SubRequest
    result: SourceResult | None = None
    error: SubError | None = None
    elapsed_ms: float = 0.0

    @property
    def payload(self):
        return self.result.payload if self.result is not None else None

    @property
    def cached(self) -> bool:
        return self.result.from_cache if self.result is not None else False


def _resolve_scenario(config: GatewayConfig) -> Scenario | None:
    if config.mode != "fixtures":
        return None
    if config.scenario is None:
        raise ConfigError("fixtures mode needs a scenario name or path")
    if "/" in config.scenario or "\\" in config.scenario:
        return load_scenario(config.scenario)
    return load_bundled(config.scenario)


class Gateway:
    """Plans, executes, caches, and merges federated queries."""

    def __init__(self, config: GatewayConfig | None = None,
                 scenario: Scenario | None = None,
                 connectors: Connectors | None = None):
        self.config = config or default_config()
        self.scenario = scenario if scenario is not None else _resolve_scenario(self.config)
        self.connectors = connectors or Connectors.from_config(self.config, self.scenario)
        self.cache = TtlCache()

    # -- public query surface -------------------------------------------

    def run_query(self, text: str,
                  variables: dict | None = None) -> tuple[QueryPlan, FederatedResponse]:
        """Parse, plan, and execute unified query text."""
        parsed = parse_query(text, variables)
        plan = plan_query(parsed)
        return plan, self.execute(plan)

    def query_paper(self, doi: Doi,
                    groups: list[str] | None = None) -> FederatedResponse:
        parsed = parse_query(build_paper_query(doi.value, groups))
        return self.execute(plan_query(parsed))

    def query_person(self, orcid: OrcidId,
                     groups: list[str] | None = None) -> FederatedResponse:
        parsed = parse_query(build_person_query(orcid.value, groups))
        return self.execute(plan_query(parsed))

    def query_citation_counts(self, dois: list[Doi]) -> FederatedResponse:
        return self.execute(plan_citation_counts(dois))

    # -- execution -------------------------------------------------------

    def execute(self, plan: QueryPlan) -> FederatedResponse:
        started = time.monotonic()
        outcomes = self._fan_out(plan)
        total_ms = (time.monotonic() - started) * 1000.0

        by_sub = {o.sub: o for o in outcomes}
        ordered = [by_sub[sub] for sub in plan.sub_requests]
        errors = tuple(o.error for o in ordered if o.error is not None)
        timing = self._timing(plan, ordered)

        data = self._merge(plan, ordered)
        return FederatedResponse(data=data, errors=errors,
                                 timing=timing, total_ms=total_ms)

    def _fan_out(self, plan: QueryPlan) -> list[_Outcome]:
        subs = plan.sub_requests
        workers = min(max(len(subs), 1), max(self.config.concurrency_cap, 1))
        deadline_s = self.config.request_deadline_ms / 1000.0
        with ThreadPoolExecutor(max_workers=workers) as pool:
            futures = [(sub, pool.submit(self._run_sub, plan, sub)) for sub in subs]
            outcomes = []
            budget_end = time.monotonic() + deadline_s
            for sub, future in futures:
                remaining = budget_end - time.monotonic()
                try:
                    outcomes.append(future.result(timeout=max(remaining, 0.001)))
                except (FutureTimeout, TimeoutError):
                    future.cancel()
                    outcomes.append(_Outcome(sub, error=SubError(
                        sub.source, sub.key, "UpstreamUnavailable",
                        "request deadline exceeded")))
        return outcomes

    def _run_sub(self, plan: QueryPlan, sub: SubRequest) -> _Outcome:
        cache_key = (sub.source, sub.key)
        hit, stored = self.cache.get(cache_key)
        if hit:
            return _Outcome(sub, result=replace(stored, from_cache=True))
        started = time.monotonic()
        try:
            payload = self._dispatch(plan, sub)
        except SourceError as exc:
            elapsed = (time.monotonic() - started) * 1000.0
            return _Outcome(sub, error=SubError(
                exc.source or sub.source, exc.key or sub.key, exc.kind, str(exc)),
                elapsed_ms=elapsed)
        elapsed = (time.monotonic() - started) * 1000.0
        result = SourceResult(source=sub.source, key=sub.key, payload=payload,
                              fetched_at=time.time())
        self.cache.put(cache_key, result, self.config.source(sub.source).ttl_s)
        return _Outcome(sub, result=result, elapsed_ms=elapsed)

    def _dispatch(self, plan: QueryPlan, sub: SubRequest):
        c = self.connectors
        if plan.root == "paper":
            doi = Doi(sub.key)
            return {
                "articles_api": lambda: c.articles.fetch_work_core(doi),
                "projects_api": lambda: c.projects.fetch_projects(doi),
                "topics_api": lambda: c.topics.fetch_topics(doi),
                "metrics_api": lambda: c.metrics.fetch_metrics(doi),
            }[sub.source]()
        if plan.root == "person":
            orcid = OrcidId(sub.key)
            return {
                "pid_graph": lambda: c.pid_graph.fetch_person(orcid),
                "topics_api": lambda: c.topics.fetch_person_topics(orcid),
            }[sub.source]()
        return c.articles.fetch_citation_count(Doi(sub.key))

    # -- merging ---------------------------------------------------------

    def _merge(self, plan: QueryPlan, outcomes: list[_Outcome]):
        if plan.root == "comparison_citations":
            if all(o.error is not None for o in outcomes):
                return None
            return {Doi(o.sub.key): o.payload for o in outcomes if o.error is None}

        root_source = plan.root_source
        root = next(o for o in outcomes if o.sub.source == root_source)
        if root.error is not None:
            return None

        groups = {o.sub.source: o for o in outcomes if o.sub.source != root_source}

        def payload(source: str):
            outcome = groups.get(source)
            if outcome is None or outcome.error is not None:
                return None
            return outcome.payload

        if plan.root == "paper":
            return WorkContext(
                core=root.payload,
                projects=payload("projects_api"),
                topics=payload("topics_api"),
                metrics=payload("metrics_api"),
            )
        person = root.payload
        return PersonContext(
            orcid=person.orcid,
            name=person.name,
            employment=person.employment,
            publications=person.publications,
            datasets=person.datasets,
            softwares=person.softwares,
            topics=payload("topics_api"),
        )

    @staticmethod
    def _timing(plan: QueryPlan,
                outcomes: list[_Outcome]) -> dict[str, SourceTiming]:
        if plan.root == "comparison_citations":
            # Parallel batch over one source: wall time ≈ slowest lookup.
            slowest = max((o.elapsed_ms for o in outcomes), default=0.0)
            cached = all(o.cached for o in outcomes)
            return {"articles_api": SourceTiming(ms=slowest, cached=cached)}
        return {o.sub.source: SourceTiming(ms=o.elapsed_ms, cached=o.cached)
                for o in outcomes}


__all__ = ["Gateway", "FederatedResponse", "QueryPlan", "ParsedQuery",
           "plan_query", "plan_citation_counts", "parse_query"]
