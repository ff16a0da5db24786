"""Additive per-feature polynomial regression by linear least squares.

The basis for m features at degree d is [1, x_1, x_1^2, ..., x_1^d, x_2, ...]:
each feature contributes its own univariate powers and the terms add up (no
cross terms), so the coefficient count stays at 1 + d*m. Coefficients come
from numpy's lstsq, which returns the minimum-norm solution when the design
matrix is rank deficient.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DimensionMismatchError, EmptyDatasetError


@dataclass(frozen=True, eq=False)
class PolyModel:
    degree: int
    n_features: int
    coefficients: np.ndarray  # [intercept, feature 0 powers 1..d, feature 1 ...]

    def __post_init__(self):
        coef = np.array(self.coefficients, dtype=float)
        expected = 1 + self.degree * self.n_features
        if coef.shape != (expected,):
            raise DimensionMismatchError(
                f"expected {expected} coefficients, got {coef.shape}")
        coef.setflags(write=False)
        object.__setattr__(self, "coefficients", coef)

    @property
    def intercept(self) -> float:
        return float(self.coefficients[0])

    def feature_coefficients(self, j: int) -> np.ndarray:
        """Powers 1..degree of feature j."""
        start = 1 + j * self.degree
        return self.coefficients[start:start + self.degree]


def _as_matrix(X) -> np.ndarray:
    X = np.asarray(X, dtype=float)
    if X.ndim == 1:
        X = X[:, None]
    if X.ndim != 2:
        raise DimensionMismatchError(f"feature matrix must be 2-d, got {X.shape}")
    return X


def design_matrix(X, degree: int) -> np.ndarray:
    X = _as_matrix(X)
    cols = [np.ones(X.shape[0])]
    for j in range(X.shape[1]):
        for power in range(1, degree + 1):
            cols.append(X[:, j] ** power)
    return np.column_stack(cols)


def fit_polynomial(X, y, degree: int = 2) -> PolyModel:
    """Least-squares fit of the additive polynomial basis."""
    if degree < 1:
        raise ValueError("degree must be >= 1")
    X = _as_matrix(X)
    y = np.asarray(y, dtype=float)
    if X.shape[0] == 0:
        raise EmptyDatasetError("fit_polynomial needs at least one row")
    if y.shape != (X.shape[0],):
        raise DimensionMismatchError(
            f"y has shape {y.shape}, expected ({X.shape[0]},)")
    coef, _, _, _ = np.linalg.lstsq(design_matrix(X, degree), y, rcond=None)
    return PolyModel(degree=degree, n_features=X.shape[1], coefficients=coef)


def predict_polynomial(model: PolyModel, X) -> np.ndarray:
    X = _as_matrix(X)
    if X.shape[1] != model.n_features:
        raise DimensionMismatchError(
            f"model expects {model.n_features} features, got {X.shape[1]}")
    return design_matrix(X, model.degree) @ model.coefficients
