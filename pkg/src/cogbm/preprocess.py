"""Min-max normalization and chronological train/test splitting."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import TooFewRowsError
from .observations import ObservationTable
from .ontology import Concept


@dataclass(frozen=True)
class ColumnScale:
    """Min-max bounds of one column. A constant column maps to all zeros."""

    lo: float
    hi: float

    def apply(self, values) -> np.ndarray:
        values = np.asarray(values, dtype=float)
        if self.hi == self.lo:
            return np.zeros_like(values)
        return (values - self.lo) / (self.hi - self.lo)

    def invert(self, values) -> np.ndarray:
        values = np.asarray(values, dtype=float)
        return values * (self.hi - self.lo) + self.lo


@dataclass(frozen=True)
class ScalerParams:
    columns: tuple[tuple[Concept, ColumnScale], ...]
    profit: ColumnScale

    def column(self, concept: Concept) -> ColumnScale:
        for c, scale in self.columns:
            if c is concept:
                return scale
        raise KeyError(f"no scale for {concept.value}")


def normalize(table: ObservationTable) -> tuple[ObservationTable, ScalerParams]:
    """Map every input column and the profit series into [0, 1].

    Returns the normalized table and the per-column bounds needed to invert
    predictions back into original units. Idempotent: normalizing an already
    normalized table returns it unchanged.
    """
    scales = []
    new_columns = []
    for concept, series in table.columns:
        scale = ColumnScale(min(series), max(series))
        scales.append((concept, scale))
        new_columns.append((concept, tuple(scale.apply(series))))
    profit_scale = ColumnScale(min(table.profit), max(table.profit))
    normalized = ObservationTable(
        table.periods, tuple(new_columns),
        tuple(profit_scale.apply(table.profit)))
    return normalized, ScalerParams(tuple(scales), profit_scale)


def split(table: ObservationTable,
          train_fraction: float) -> tuple[ObservationTable, ObservationTable]:
    """Chronological split: first ceil(fraction * n) periods train, rest test.

    No shuffling; this is time-series data. Raises TooFewRowsError if either
    side would be empty.
    """
    if not (0.0 < train_fraction < 1.0):
        raise ValueError("train_fraction must be in (0, 1)")
    n = len(table.periods)
    k = math.ceil(train_fraction * n)
    if k < 1 or k >= n:
        raise TooFewRowsError(
            f"cannot split {n} period(s) at fraction {train_fraction}")

    def take(lo: int, hi: int) -> ObservationTable:
        return ObservationTable(
            table.periods[lo:hi],
            tuple((c, s[lo:hi]) for c, s in table.columns),
            table.profit[lo:hi])

    return take(0, k), take(k, n)
