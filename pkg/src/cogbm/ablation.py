"""Nine-input vs fourteen-input ablation harness.

``run_ablation`` takes a table with all 14 input columns bound, normalizes it,
splits it chronologically, and trains two regressors (the BEL network and the
additive polynomial baseline) on two input sets: the nine classic columns and
all fourteen. MSE and R-squared are computed on the test split in normalized
units; the per-period prediction series are inverse-transformed back into
original profit units, and period-over-period rates of change are derived for
every prediction series and for actual profit.

Reports are deterministic values: the same table and config always produce an
identical report, and the JSON/TSV renderings are byte-stable.
"""

from __future__ import annotations

import io
import json
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from . import bel
from .metrics import mse, r_squared, rate_of_change
from .observations import ObservationTable
from .ontology import Concept, canonical_schema
from .polynomial import fit_polynomial, predict_polynomial
from .preprocess import normalize, split


@dataclass(frozen=True)
class AblationConfig:
    train_fraction: float = 0.8
    bel: bel.BelConfig = bel.BelConfig()
    poly_degree: int = 2

    def to_dict(self) -> dict:
        return {
            "train_fraction": self.train_fraction,
            "bel": {
                "alpha": self.bel.alpha,
                "beta": self.bel.beta,
                "epochs": self.bel.epochs,
                "seed": self.bel.seed,
                "shuffle": self.bel.shuffle,
            },
            "poly_degree": self.poly_degree,
        }


@dataclass(frozen=True)
class EvaluationMetrics:
    mse: float
    r2: float


@dataclass(frozen=True)
class ModelSeries:
    """One model's test-set outcome: metrics plus prediction series."""

    metrics: EvaluationMetrics
    predicted: tuple[float, ...]        # original profit units
    rate_of_change: tuple[float, ...]   # length = test periods - 1


@dataclass(frozen=True)
class ArmReport:
    """Results for one input set (nine classic or all fourteen columns)."""

    inputs: tuple[Concept, ...]
    bel: ModelSeries
    polynomial: ModelSeries


@dataclass(frozen=True)
class AblationReport:
    config: AblationConfig
    train_periods: tuple[str, ...]
    test_periods: tuple[str, ...]
    actual: tuple[float, ...]                 # original units, test periods
    actual_rate_of_change: tuple[float, ...]
    baseline9: ArmReport
    cognitive14: ArmReport


def run_ablation(table: ObservationTable,
                 config: AblationConfig | None = None) -> AblationReport:
    """Run the full 9-vs-14 comparison. Requires all 14 input columns."""
    config = config or AblationConfig()
    schema = canonical_schema()
    missing = [c.value for c in schema.input_elements
               if c not in table.elements]
    if missing:
        raise ValueError(f"table is missing input column(s): {', '.join(missing)}")

    normalized, scaler = normalize(table)
    train, test = split(normalized, config.train_fraction)
    n_train = len(train.periods)

    actual_norm = test.profit_array
    actual_orig = np.asarray(table.profit[n_train:], dtype=float)
    actual_rate = rate_of_change(actual_orig)

    def evaluate(elements: Sequence[Concept]) -> ArmReport:
        elements = tuple(elements)
        x_train = train.matrix(elements)
        x_test = test.matrix(elements)
        y_train = train.profit_array

        net = bel.BelNetwork.zeros(len(elements), config.bel)
        net, _ = bel.fit(net, list(zip(x_train, y_train)))
        bel_pred = np.array([bel.predict(net, row) for row in x_test])

        poly = fit_polynomial(x_train, y_train, config.poly_degree)
        poly_pred = predict_polynomial(poly, x_test)

        def series(pred_norm: np.ndarray) -> ModelSeries:
            pred_orig = scaler.profit.invert(pred_norm)
            return ModelSeries(
                metrics=EvaluationMetrics(
                    mse=mse(pred_norm, actual_norm),
                    r2=r_squared(pred_norm, actual_norm)),
                predicted=tuple(float(x) for x in pred_orig),
                rate_of_change=tuple(float(x) for x in rate_of_change(pred_orig)))

        return ArmReport(inputs=elements,
                         bel=series(bel_pred),
                         polynomial=series(poly_pred))

    return AblationReport(
        config=config,
        train_periods=train.periods,
        test_periods=test.periods,
        actual=tuple(float(x) for x in actual_orig),
        actual_rate_of_change=tuple(float(x) for x in actual_rate),
        baseline9=evaluate(schema.baseline_inputs),
        cognitive14=evaluate(schema.input_elements),
    )


# --- stable serializations ---------------------------------------------------

def _model_dict(series: ModelSeries) -> dict:
    return {
        "mse": series.metrics.mse,
        "r2": series.metrics.r2,
        "predicted_profit": list(series.predicted),
        "rate_of_change": list(series.rate_of_change),
    }


def _arm_dict(arm: ArmReport) -> dict:
    return {
        "inputs": [c.value for c in arm.inputs],
        "bel": _model_dict(arm.bel),
        "polynomial": _model_dict(arm.polynomial),
    }


def report_to_dict(report: AblationReport) -> dict:
    """Plain-dict form of a report with a fixed key order."""
    return {
        "config": report.config.to_dict(),
        "train_periods": list(report.train_periods),
        "test_periods": list(report.test_periods),
        "actual_profit": list(report.actual),
        "actual_rate_of_change": list(report.actual_rate_of_change),
        "baseline9": _arm_dict(report.baseline9),
        "cognitive14": _arm_dict(report.cognitive14),
    }


def report_to_json(report: AblationReport, extra: dict | None = None) -> str:
    """Stable JSON rendering; ``extra`` entries (e.g. a run config) are
    placed first."""
    payload = dict(extra or {})
    payload.update(report_to_dict(report))
    return json.dumps(payload, indent=2) + "\n"


_TSV_ARMS = (("baseline9", "bel"), ("baseline9", "polynomial"),
             ("cognitive14", "bel"), ("cognitive14", "polynomial"))


def report_to_tsv(report: AblationReport,
                  header_comments: Sequence[str] = ()) -> str:
    """Per-period series as TSV, ready for external plotting.

    Level columns hold original-unit profit; ``*_rate`` columns hold the
    relative change from the previous period (blank on the first test period).
    """
    arms = {"baseline9": report.baseline9, "cognitive14": report.cognitive14}
    out = io.StringIO()
    for comment in header_comments:
        out.write(f"# {comment}\n")
    columns = (["period", "actual_profit"]
               + [f"{arm}_{model}" for arm, model in _TSV_ARMS]
               + ["actual_rate"]
               + [f"{arm}_{model}_rate" for arm, model in _TSV_ARMS])
    out.write("\t".join(columns) + "\n")
    for i, period in enumerate(report.test_periods):
        row = [period, repr(report.actual[i])]
        for arm, model in _TSV_ARMS:
            row.append(repr(getattr(arms[arm], model).predicted[i]))
        if i == 0:
            row += [""] * (1 + len(_TSV_ARMS))
        else:
            row.append(repr(report.actual_rate_of_change[i - 1]))
            for arm, model in _TSV_ARMS:
                row.append(repr(getattr(arms[arm], model).rate_of_change[i - 1]))
        out.write("\t".join(row) + "\n")
    return out.getvalue()
