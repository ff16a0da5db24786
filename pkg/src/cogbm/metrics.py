"""Evaluation metrics: MSE, R-squared, period-over-period rate of change."""

from __future__ import annotations

import numpy as np

from .errors import (
    ConstantActualError,
    EmptySeriesError,
    LengthMismatchError,
    ZeroBaseError,
)


def _pair(predicted, actual) -> tuple[np.ndarray, np.ndarray]:
    p = np.asarray(predicted, dtype=float)
    a = np.asarray(actual, dtype=float)
    if p.shape != a.shape or p.ndim != 1:
        raise LengthMismatchError(f"series shapes differ: {p.shape} vs {a.shape}")
    return p, a


def mse(predicted, actual) -> float:
    """Mean squared error. Zero iff the series are identical."""
    p, a = _pair(predicted, actual)
    if p.size == 0:
        raise EmptySeriesError("mse of empty series")
    return float(np.mean((p - a) ** 2))


def r_squared(predicted, actual) -> float:
    """Coefficient of determination, 1 - SSres/SStot, SStot about the
    mean of ``actual``. Undefined (ConstantActualError) when SStot is zero."""
    p, a = _pair(predicted, actual)
    if a.size == 0:
        raise EmptySeriesError("r_squared of empty series")
    ss_tot = float(np.sum((a - np.mean(a)) ** 2))
    if ss_tot == 0.0:
        raise ConstantActualError("actual series is constant")
    ss_res = float(np.sum((a - p) ** 2))
    return 1.0 - ss_res / ss_tot


def rate_of_change(series) -> np.ndarray:
    """Relative one-step deltas: out[k] = (s[k+1] - s[k]) / s[k].

    Output has length n-1. Raises ZeroBaseError when any base value s[k]
    (k < n-1) is exactly zero.
    """
    s = np.asarray(series, dtype=float)
    if s.ndim != 1 or s.size < 2:
        raise EmptySeriesError("rate_of_change needs at least two values")
    base = s[:-1]
    if np.any(base == 0.0):
        raise ZeroBaseError("zero base value in rate_of_change")
    return (s[1:] - base) / base
