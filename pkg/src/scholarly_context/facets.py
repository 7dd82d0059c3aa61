"""Comparison tables and declarative numeric facets.

Filters compose by conjunction, preserve row order, and drop rows whose
targeted value is unknown; the summary exposes how many rows each numeric
target can actually rank so widgets can disclose exclusions.
"""

from __future__ import annotations

import json
import operator
from dataclasses import dataclass, field, replace
from pathlib import Path
from typing import Callable, Mapping

from .errors import InvalidRecord, TypeMismatch, UnknownColumn
from .pids import Doi, normalize_doi

CITATION_TARGET = "citation_count"

OPS: dict[str, Callable[[float, float], bool]] = {
    "lt": operator.lt,
    "le": operator.le,
    "gt": operator.gt,
    "ge": operator.ge,
    "eq": operator.eq,
}

COLUMN_KINDS = ("text", "numeric")


@dataclass(frozen=True)
class Column:
    name: str
    kind: str

    def __post_init__(self):
        if not self.name:
            raise InvalidRecord("column needs a name")
        if self.kind not in COLUMN_KINDS:
            raise InvalidRecord(f"column kind must be one of {COLUMN_KINDS}")


@dataclass(frozen=True)
class Row:
    label: str
    doi: Doi | None = None
    cells: Mapping[str, object] = field(default_factory=dict)
    citation_count: int | None = None

    def __post_init__(self):
        if not self.label:
            raise InvalidRecord("row needs a label")


@dataclass(frozen=True)
class ComparisonTable:
    title: str
    columns: tuple[Column, ...] = ()
    rows: tuple[Row, ...] = ()

    def __post_init__(self):
        names = [c.name for c in self.columns]
        if len(set(names)) != len(names):
            raise InvalidRecord("duplicate column names")
        kinds = dict(zip(names, (c.kind for c in self.columns)))
        for row in self.rows:
            for name, value in row.cells.items():
                if name not in kinds:
                    raise InvalidRecord(
                        f"row {row.label!r} has a cell for unknown column {name!r}")
                if (kinds[name] == "numeric" and value is not None
                        and not isinstance(value, (int, float))):
                    raise InvalidRecord(
                        f"numeric column {name!r} holds {value!r} in row {row.label!r}")

    def column(self, name: str) -> Column | None:
        return next((c for c in self.columns if c.name == name), None)

    @property
    def numeric_columns(self) -> tuple[Column, ...]:
        return tuple(c for c in self.columns if c.kind == "numeric")


@dataclass(frozen=True)
class FacetFilter:
    """target is CITATION_TARGET or the name of a numeric content column."""

    target: str
    op: str
    threshold: float

    def __post_init__(self):
        if self.op not in OPS:
            raise InvalidRecord(f"unknown operator {self.op!r}")
        if not isinstance(self.threshold, (int, float)):
            raise InvalidRecord("threshold must be a number")


def _validate_filters(table: ComparisonTable, filters: list[FacetFilter]) -> None:
    for facet in filters:
        if facet.target == CITATION_TARGET:
            continue
        column = table.column(facet.target)
        if column is None:
            raise UnknownColumn(f"no column named {facet.target!r}")
        if column.kind != "numeric":
            raise TypeMismatch(f"column {facet.target!r} is not numeric")


def _target_value(row: Row, target: str):
    if target == CITATION_TARGET:
        return row.citation_count
    return row.cells.get(target)


def partition_rows(table: ComparisonTable, filters: list[FacetFilter]
                   ) -> tuple[tuple[Row, ...], tuple[Row, ...], tuple[Row, ...]]:
    """Split rows into (kept, dropped, unknown), each preserving input order.

    unknown collects rows missing a value for some active filter target;
    dropped collects rows whose known values fail a comparison.
    """
    _validate_filters(table, filters)
    if not filters:
        return table.rows, (), ()
    kept, dropped, unknown = [], [], []
    for row in table.rows:
        values = [_target_value(row, f.target) for f in filters]
        if any(v is None for v in values):
            unknown.append(row)
        elif all(OPS[f.op](v, f.threshold) for f, v in zip(filters, values)):
            kept.append(row)
        else:
            dropped.append(row)
    return tuple(kept), tuple(dropped), tuple(unknown)


def apply_facets(table: ComparisonTable,
                 filters: list[FacetFilter]) -> ComparisonTable:
    """Keep rows satisfying every filter; an empty filter list is identity."""
    if not filters:
        return table
    kept, _, _ = partition_rows(table, filters)
    return replace(table, rows=kept)


def facet_summary(table: ComparisonTable) -> dict[str, dict]:
    """Value bounds per numeric target: slider limits for the facet widget."""
    summary = {}
    targets: list[tuple[str, list]] = [
        (CITATION_TARGET, [r.citation_count for r in table.rows])]
    for column in table.numeric_columns:
        targets.append((column.name, [r.cells.get(column.name) for r in table.rows]))
    for name, values in targets:
        present = [v for v in values if v is not None]
        summary[name] = {
            "min": min(present) if present else None,
            "max": max(present) if present else None,
            "present": len(present),
        }
    return summary


def enrich_with_citations(
    table: ComparisonTable,
    fetch_counts: Callable[[list[Doi]], Mapping[Doi, int | None]],
) -> ComparisonTable:
    """Attach citation counts to every DOI-bearing row; everything else is kept as-is."""
    dois = [row.doi for row in table.rows if row.doi is not None]
    if not dois:
        return table
    counts = fetch_counts(list(dict.fromkeys(dois)))
    rows = tuple(
        replace(row, citation_count=counts.get(row.doi))
        if row.doi is not None else row
        for row in table.rows
    )
    return replace(table, rows=rows)


# --- JSON document format ---------------------------------------------------

def table_from_dict(raw: dict) -> ComparisonTable:
    """Parse the comparison document format; raises InvalidRecord on problems."""
    if not isinstance(raw, dict):
        raise InvalidRecord("comparison document must be a JSON object")
    try:
        columns = tuple(Column(name=str(c["name"]), kind=str(c["kind"]))
                        for c in raw.get("columns", []))
        rows = []
        for item in raw.get("rows", []):
            doi = None
            if item.get("doi"):
                doi = normalize_doi(str(item["doi"]))
            rows.append(Row(
                label=str(item.get("label", "")),
                doi=doi,
                cells=dict(item.get("cells", {})),
                citation_count=item.get("citation_count"),
            ))
        return ComparisonTable(title=str(raw.get("title", "")),
                               columns=columns, rows=tuple(rows))
    except InvalidRecord:
        raise
    except Exception as exc:
        raise InvalidRecord(f"malformed comparison document: {exc}") from exc


def table_to_dict(table: ComparisonTable) -> dict:
    rows = []
    for row in table.rows:
        item: dict = {"label": row.label}
        if row.doi is not None:
            item["doi"] = row.doi.value
        item["cells"] = dict(row.cells)
        if row.citation_count is not None:
            item["citation_count"] = row.citation_count
        rows.append(item)
    return {
        "title": table.title,
        "columns": [{"name": c.name, "kind": c.kind} for c in table.columns],
        "rows": rows,
    }


def load_table(path: str | Path) -> ComparisonTable:
    try:
        raw = json.loads(Path(path).read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise InvalidRecord(f"cannot read comparison file {path}: {exc}") from exc
    return table_from_dict(raw)


def filters_from_list(raw_filters: list) -> list[FacetFilter]:
    filters = []
    for raw in raw_filters or []:
        if not isinstance(raw, dict):
            raise InvalidRecord(f"malformed filter: {raw!r}")
        try:
            filters.append(FacetFilter(target=str(raw["target"]),
                                       op=str(raw["op"]),
                                       threshold=float(raw["threshold"])))
        except (KeyError, TypeError, ValueError) as exc:
            raise InvalidRecord(f"malformed filter {raw!r}: {exc}") from exc
    return filters
