"""Command-line front door: paper/person lookups, comparison filtering,
and the long-running gateway and stub servers.

Exit codes are scripting-friendly: 0 success, 1 usage or configuration
problem, 2 data-level not-found.
"""

from __future__ import annotations

import json
import re
import signal
import sys
from pathlib import Path

import click

from .config import GatewayConfig, load_config, validate_config
from .errors import (ChecksumMismatch, ConfigError, InvalidRecord,
                     MalformedPid, PortInUse, ScenarioInvalid, SchemaError,
                     ScholarlyContextError, TypeMismatch, UnknownColumn)
from .facets import (CITATION_TARGET, FacetFilter, apply_facets,
                     enrich_with_citations, load_table, partition_rows,
                     table_to_dict)
from .fixtures.scenario import Scenario, load_bundled, load_scenario
from .fixtures.stub import serve_stub
from .gateway.core import Gateway
from .gateway.queries import build_paper_query, build_person_query
from .gateway.wire import envelope_dict
from .gateway import service
from .pids import normalize_doi, normalize_orcid

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_NOT_FOUND = 2

DEFAULT_SCENARIO = "happy"

_WHERE_RE = re.compile(r"^\s*(\S+)\s*(<=|>=|==|=|<|>)\s*(-?\d+(?:\.\d+)?)\s*$")
_WHERE_OPS = {"<": "lt", "<=": "le", ">": "gt", ">=": "ge", "=": "eq", "==": "eq"}


def _build_config(config_path: str | None, mode: str | None,
                  scenario: str | None, port: int | None = None) -> GatewayConfig:
    from dataclasses import replace

    config = load_config(config_path)
    if mode:
        config = replace(config, mode=mode)
    if scenario:
        config = replace(config, scenario=scenario)
    if config.mode == "fixtures" and config.scenario is None:
        config = replace(config, scenario=DEFAULT_SCENARIO)
    if port:
        config = replace(config, port=port)
    return validate_config(config)


def _gateway(config: GatewayConfig) -> Gateway:
    return Gateway(config)


def _emit(payload: dict, output: str) -> None:
    if output == "compact":
        text = json.dumps(payload, separators=(",", ":"))
    else:
        text = json.dumps(payload, indent=2)
    click.echo(text)


def _query_options(command):
    for option in (
        click.option("--mode", type=click.Choice(["live", "fixtures"]),
                     default=None, help="Upstream access mode."),
        click.option("--scenario", default=None,
                     help="Scenario directory or bundled scenario name."),
        click.option("--config", "config_path", default=None,
                     type=click.Path(), help="JSON config file."),
        click.option("--output", type=click.Choice(["pretty", "compact"]),
                     default="pretty", show_default=True),
        click.option("--timing", is_flag=True,
                     help="Include the volatile timing block in output."),
    ):
        command = option(command)
    return command


@click.group()
def cli():
    """Federated scholarly-context queries and services."""


@cli.command()
@click.option("--doi", required=True, help="DOI of the article (any common form).")
@click.option("--fields", default=None,
              help="Comma-separated paper fields (default: all).")
@_query_options
def paper(doi, fields, mode, scenario, config_path, output, timing):
    """Fetch the full context for one article."""
    try:
        key = normalize_doi(doi)
    except MalformedPid as exc:
        raise click.UsageError(str(exc))
    groups = [f.strip() for f in fields.split(",") if f.strip()] if fields else None
    gateway = _gateway(_build_config(config_path, mode, scenario))
    try:
        query = build_paper_query(key.value, groups)
        plan, response = gateway.run_query(query)
    except SchemaError as exc:
        raise click.UsageError(str(exc))
    _emit(envelope_dict(plan, response, include_timing=timing), output)
    sys.exit(EXIT_OK if response.data is not None else EXIT_NOT_FOUND)


@cli.command()
@click.option("--orcid", required=True, help="ORCID iD (bare or URL form).")
@click.option("--fields", default=None,
              help="Comma-separated person fields (default: all).")
@_query_options
def person(orcid, fields, mode, scenario, config_path, output, timing):
    """Fetch the profile context for one contributor."""
    try:
        key = normalize_orcid(orcid)
    except (MalformedPid, ChecksumMismatch) as exc:
        raise click.UsageError(str(exc))
    groups = [f.strip() for f in fields.split(",") if f.strip()] if fields else None
    gateway = _gateway(_build_config(config_path, mode, scenario))
    try:
        query = build_person_query(key.value, groups)
        plan, response = gateway.run_query(query)
    except SchemaError as exc:
        raise click.UsageError(str(exc))
    _emit(envelope_dict(plan, response, include_timing=timing), output)
    sys.exit(EXIT_OK if response.data is not None else EXIT_NOT_FOUND)


def _parse_where(expressions: tuple[str, ...]) -> list[FacetFilter]:
    filters = []
    for text in expressions:
        match = _WHERE_RE.match(text)
        if not match:
            raise click.UsageError(
                f"--where must look like '<column> <op> <number>', got {text!r}")
        column, op, value = match.groups()
        filters.append(FacetFilter(target=column, op=_WHERE_OPS[op],
                                   threshold=float(value)))
    return filters


@cli.command()
@click.argument("input_file", type=click.Path(exists=True, dir_okay=False))
@click.option("--min-citations", type=int, default=None,
              help="Keep rows with at least this many citations.")
@click.option("--max-citations", type=int, default=None,
              help="Keep rows with at most this many citations.")
@click.option("--where", "where_clauses", multiple=True,
              help="Numeric column filter, e.g. --where 'R0 > 3.0'.")
@_query_options
def compare(input_file, min_citations, max_citations, where_clauses,
            mode, scenario, config_path, output, timing):
    """Enrich a comparison file with citation counts and filter it."""
    table = load_table(input_file)
    filters = _parse_where(where_clauses)
    if min_citations is not None:
        filters.append(FacetFilter(CITATION_TARGET, "ge", float(min_citations)))
    if max_citations is not None:
        filters.append(FacetFilter(CITATION_TARGET, "le", float(max_citations)))

    gateway = _gateway(_build_config(config_path, mode, scenario))

    def fetch_counts(dois):
        counts = gateway.query_citation_counts(dois)
        if counts.data is None:
            raise ScholarlyContextError("citation-count lookups all failed")
        return counts.data

    enriched = enrich_with_citations(table, fetch_counts)
    try:
        kept, dropped, unknown = partition_rows(enriched, filters)
        filtered = apply_facets(enriched, filters)
    except (UnknownColumn, TypeMismatch) as exc:
        raise click.UsageError(str(exc))
    _emit(table_to_dict(filtered), output)
    click.echo(f"{len(kept)} kept · {len(dropped)} filtered · {len(unknown)} unknown",
               err=True)
    sys.exit(EXIT_OK)


@cli.command()
@click.option("--port", type=int, default=None, help="Listen port.")
@click.option("--host", default="127.0.0.1", show_default=True)
@click.option("--mode", type=click.Choice(["live", "fixtures"]), default=None)
@click.option("--scenario", default=None)
@click.option("--config", "config_path", default=None, type=click.Path())
def serve(port, host, mode, scenario, config_path):
    """Run the gateway HTTP service."""
    config = _build_config(config_path, mode, scenario, port)
    service.serve(config, host=host)


@cli.command()
@click.option("--scenario", default=DEFAULT_SCENARIO, show_default=True)
@click.option("--host", default="127.0.0.1", show_default=True)
@click.option("--port-base", type=int, default=0,
              help="First stub port; subsequent sources get port-base+1, +2, … "
                   "(0 picks free ports).")
def stub(scenario, host, port_base):
    """Run the stub upstream servers for a scenario."""
    loaded = _load_named_scenario(scenario)
    ports = None
    if port_base:
        from .models import SOURCES
        ports = {source: port_base + i for i, source in enumerate(SOURCES)}
    cluster = serve_stub(loaded, host=host, ports=ports)
    click.echo(json.dumps({"base_urls": cluster.base_urls}, indent=2))
    click.echo("stub cluster running; Ctrl-C to stop", err=True)
    try:
        signal.pause()
    except (KeyboardInterrupt, AttributeError):
        pass
    finally:
        cluster.stop()


def _load_named_scenario(name: str) -> Scenario:
    if "/" in name or "\\" in name or Path(name).is_dir():
        return load_scenario(name)
    return load_bundled(name)


def main(argv: list[str] | None = None) -> int:
    """Entry point with the documented exit-code contract."""
    try:
        cli.main(args=argv, standalone_mode=False)
    except SystemExit as exc:
        return int(exc.code or 0)
    except click.UsageError as exc:
        click.echo(f"error: {exc.format_message()}", err=True)
        return EXIT_USAGE
    except click.ClickException as exc:
        click.echo(f"error: {exc.format_message()}", err=True)
        return EXIT_USAGE
    except (ConfigError, ScenarioInvalid, InvalidRecord, MalformedPid,
            ChecksumMismatch, SchemaError, PortInUse) as exc:
        click.echo(f"error: {exc}", err=True)
        return EXIT_USAGE
    except ScholarlyContextError as exc:
        click.echo(f"error: {exc}", err=True)
        return EXIT_NOT_FOUND
    except KeyboardInterrupt:
        return EXIT_OK
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
