"""Observation tables: periods x (input-element indicators + profit).

The on-disk form is ordinary CSV (RFC-4180 quoting, UTF-8, header row). The
first column holds the period label (year, quarter, ...), a column named
``profit`` (any case) holds the target series, and every other column is an
indicator bound to one of the 14 input elements -- either because its header
already is the element symbol, or through an explicit header->element binding
map. Rows are never reordered or dropped: periods keep file order.
"""

from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass
from typing import Mapping, Optional, Sequence

import numpy as np

from .errors import ParseError
from .ontology import Concept, canonical_schema, parse_concept


@dataclass(frozen=True)
class ObservationTable:
    """Immutable numeric table with column-to-element binding.

    All series have the same length as ``periods`` (at least 1), columns are
    distinct input elements, and every value is finite.
    """

    periods: tuple[str, ...]
    columns: tuple[tuple[Concept, tuple[float, ...]], ...]
    profit: tuple[float, ...]

    def __post_init__(self):
        object.__setattr__(self, "periods", tuple(str(p) for p in self.periods))
        object.__setattr__(self, "columns", tuple(
            (c, tuple(float(x) for x in series)) for c, series in self.columns))
        object.__setattr__(self, "profit", tuple(float(x) for x in self.profit))

        n = len(self.periods)
        if n < 1:
            raise ValueError("table needs at least one period")
        if len(self.profit) != n:
            raise ValueError("profit series length differs from period count")
        inputs = set(canonical_schema().input_elements)
        seen = set()
        for concept, series in self.columns:
            if concept not in inputs:
                raise ValueError(f"{concept.value} is not an input element")
            if concept in seen:
                raise ValueError(f"duplicate column for {concept.value}")
            seen.add(concept)
            if len(series) != n:
                raise ValueError(f"column {concept.value} length differs"
                                 " from period count")
            if not all(math.isfinite(x) for x in series):
                raise ValueError(f"column {concept.value} has non-finite values")
        if not all(math.isfinite(x) for x in self.profit):
            raise ValueError("profit series has non-finite values")

    @property
    def elements(self) -> tuple[Concept, ...]:
        return tuple(c for c, _ in self.columns)

    def series(self, concept: Concept) -> tuple[float, ...]:
        for c, s in self.columns:
            if c is concept:
                return s
        raise KeyError(f"no column bound to {concept.value}")

    def matrix(self, elements: Optional[Sequence[Concept]] = None) -> np.ndarray:
        """Column-stacked float matrix, one column per requested element."""
        elements = self.elements if elements is None else tuple(elements)
        return np.column_stack([np.asarray(self.series(c), dtype=float)
                                for c in elements])

    @property
    def profit_array(self) -> np.ndarray:
        return np.asarray(self.profit, dtype=float)


def load_observations(csv_text: str,
                      binding: Optional[Mapping[str, Concept]] = None,
                      ) -> ObservationTable:
    """Ingest CSV text into an ObservationTable. Raises ParseError.

    ``binding`` maps header names to input elements. When omitted, headers
    other than the period and profit columns must themselves be element
    symbols (aliases accepted).
    """
    reader = csv.reader(io.StringIO(csv_text))
    try:
        header = next(reader)
    except StopIteration:
        raise ParseError(1, ParseError.KIND_SYNTAX, "missing header row") from None
    if len(header) < 2:
        raise ParseError(1, ParseError.KIND_BAD_ARITY,
                         "header needs a period column and a profit column")

    profit_idx = None
    concept_by_idx: dict[int, Concept] = {}
    for idx, name in enumerate(header[1:], start=1):
        if name.strip().lower() == "profit":
            if profit_idx is not None:
                raise ParseError(1, ParseError.KIND_BAD_ARITY,
                                 "more than one profit column")
            profit_idx = idx
            continue
        concept = _bind_header(name, binding)
        if concept in concept_by_idx.values():
            raise ParseError(1, ParseError.KIND_DUPLICATE_ELEMENT,
                             f"two columns bound to {concept.value}")
        concept_by_idx[idx] = concept
    if profit_idx is None:
        raise ParseError(1, ParseError.KIND_BAD_ARITY, "no profit column")

    periods: list[str] = []
    values: dict[int, list[float]] = {idx: [] for idx in concept_by_idx}
    profits: list[float] = []
    for row in reader:
        line = reader.line_num
        if len(row) != len(header):
            raise ParseError(line, ParseError.KIND_BAD_ARITY,
                             f"row has {len(row)} cells, header has {len(header)}")
        periods.append(row[0])
        for idx in list(concept_by_idx) + [profit_idx]:
            cell = row[idx]
            try:
                value = float(cell)
            except ValueError:
                raise ParseError(line, ParseError.KIND_SYNTAX,
                                 f"cell {cell!r} is not a number") from None
            if not math.isfinite(value):
                raise ParseError(line, ParseError.KIND_SYNTAX,
                                 f"cell {cell!r} is not finite")
            if idx == profit_idx:
                profits.append(value)
            else:
                values[idx].append(value)
    if not periods:
        raise ParseError(reader.line_num + 1, ParseError.KIND_SYNTAX,
                         "no data rows")

    columns = tuple((concept_by_idx[idx], tuple(values[idx]))
                    for idx in sorted(concept_by_idx))
    return ObservationTable(tuple(periods), columns, tuple(profits))


def _bind_header(name: str, binding: Optional[Mapping[str, Concept]]) -> Concept:
    token = name.strip()
    if binding is not None:
        if token not in binding:
            raise ParseError(1, ParseError.KIND_UNKNOWN_CONCEPT,
                             f"header {token!r} missing from binding map")
        concept = binding[token]
    else:
        try:
            concept = parse_concept(token)
        except ValueError:
            raise ParseError(1, ParseError.KIND_UNKNOWN_CONCEPT,
                             f"header {token!r} is not an element symbol and"
                             " no binding map was given") from None
    if concept not in canonical_schema().input_elements:
        raise ParseError(1, ParseError.KIND_UNKNOWN_CONCEPT,
                         f"{concept.value} cannot be bound as an input column")
    return concept


def table_to_csv(table: ObservationTable, period_header: str = "period") -> str:
    """Render a table as CSV (inputs in table order, profit last)."""
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow([period_header] + [c.value for c in table.elements]
                    + ["profit"])
    for i, period in enumerate(table.periods):
        row = [period] + [repr(series[i]) for _, series in table.columns]
        row.append(repr(table.profit[i]))
        writer.writerow(row)
    return out.getvalue()


def load_binding(csv_text: str) -> dict[str, Concept]:
    """Parse a header->element binding map.

    One ``header,SYMBOL`` pair per line; blank lines and ``#`` comments are
    ignored. Raises ParseError.
    """
    binding: dict[str, Concept] = {}
    for lineno, raw in enumerate(csv_text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = [p.strip() for p in line.split(",")]
        if len(parts) != 2:
            raise ParseError(lineno, ParseError.KIND_SYNTAX,
                             "expected: <header>,<SYMBOL>")
        try:
            concept = parse_concept(parts[1])
        except ValueError as exc:
            raise ParseError(lineno, ParseError.KIND_UNKNOWN_CONCEPT,
                             str(exc)) from None
        if parts[0] in binding:
            raise ParseError(lineno, ParseError.KIND_DUPLICATE_ELEMENT,
                             f"header {parts[0]!r} bound twice")
        binding[parts[0]] = concept
    return binding
