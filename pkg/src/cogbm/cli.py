"""Command-line runner wiring ingestion, validation, training and ablation.

Usage:
    cogbm validate <model.cbm>
    cogbm train   <data.csv> [--binding <map.csv>] [learning options]
    cogbm predict <data.csv> --net <snapshot> [--binding <map.csv>]
    cogbm ablate  <data.csv> [--binding <map.csv>] [learning options]
    cogbm report  <ablation.json>

Outputs land in --out, else $COGBM_OUT_DIR, else the working directory.
Every artifact embeds the full run configuration (as a leading "run_config"
object in JSON, as '#' comment lines in TSV and snapshot files), so re-running
the same command line reproduces it byte for byte. Input files are never
modified.

Exit codes: 0 success (for validate: the model is valid); 1 the model failed
validation; 2 I/O or parse errors, with the offending line number on stderr.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from . import bel
from .ablation import AblationConfig, report_to_json, report_to_tsv, run_ablation
from .dsl import parse_model
from .errors import CogbmError, ParseError
from .metrics import mse, r_squared
from .observations import load_binding, load_observations
from .ontology import canonical_schema, validate_instance
from .polynomial import fit_polynomial, predict_polynomial
from .preprocess import normalize, split

OUT_DIR_ENV = "COGBM_OUT_DIR"


@dataclass(frozen=True)
class RunConfig:
    """Everything needed to reproduce a run; echoed into every artifact."""

    command: str
    inputs: tuple[str, ...]
    output_dir: str
    alpha: float
    beta: float
    epochs: int
    seed: int
    shuffle: bool
    poly_degree: int
    train_fraction: float

    def to_dict(self) -> dict:
        return {
            "command": self.command,
            "inputs": list(self.inputs),
            "output_dir": self.output_dir,
            "alpha": self.alpha,
            "beta": self.beta,
            "epochs": self.epochs,
            "seed": self.seed,
            "shuffle": self.shuffle,
            "poly_degree": self.poly_degree,
            "train_fraction": self.train_fraction,
        }

    def comment_lines(self) -> list[str]:
        return [f"{k}={v}" for k, v in self.to_dict().items()]

    def bel_config(self) -> bel.BelConfig:
        return bel.BelConfig(alpha=self.alpha, beta=self.beta,
                             epochs=self.epochs, seed=self.seed,
                             shuffle=self.shuffle)

    def ablation_config(self) -> AblationConfig:
        return AblationConfig(train_fraction=self.train_fraction,
                              bel=self.bel_config(),
                              poly_degree=self.poly_degree)


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cogbm",
        description="Cognitive business-model toolkit: validate ontology"
                    " instances, train profit regressors, run 9-vs-14"
                    " input ablations.")
    sub = parser.add_subparsers(dest="command", required=True)

    p_validate = sub.add_parser("validate",
                                help="check a .cbm model against the schema")
    p_validate.add_argument("model", help="path to a .cbm model file")

    def add_data_options(p, with_learning=True):
        p.add_argument("data", help="observation CSV path")
        p.add_argument("--binding", metavar="MAP",
                       help="header->element binding map CSV")
        p.add_argument("--out", metavar="DIR", default=None,
                       help=f"output directory (default: ${OUT_DIR_ENV} or .)")
        if with_learning:
            p.add_argument("--alpha", type=float, default=0.2,
                           help="amygdala learning rate (default 0.2)")
            p.add_argument("--beta", type=float, default=0.2,
                           help="orbitofrontal learning rate (default 0.2)")
            p.add_argument("--epochs", type=int, default=500,
                           help="training passes (default 500)")
            p.add_argument("--seed", type=int, default=0,
                           help="seed for optional shuffling (default 0)")
            p.add_argument("--shuffle", action="store_true",
                           help="reshuffle sample order each epoch")
            p.add_argument("--poly-degree", type=int, default=2,
                           help="polynomial baseline degree (default 2)")
            p.add_argument("--train-fraction", type=float, default=0.8,
                           help="chronological train fraction (default 0.8)")

    p_train = sub.add_parser("train",
                             help="train BEL + polynomial baseline on a CSV")
    add_data_options(p_train)

    p_predict = sub.add_parser("predict",
                               help="predict profit with a trained snapshot")
    add_data_options(p_predict, with_learning=False)
    p_predict.add_argument("--net", required=True, metavar="SNAPSHOT",
                           help="network snapshot written by train")

    p_ablate = sub.add_parser("ablate",
                              help="run the 9-vs-14 input ablation")
    add_data_options(p_ablate)

    p_report = sub.add_parser("report",
                              help="print a human-readable ablation summary")
    p_report.add_argument("ablation", help="ablation.json written by ablate")

    return parser


def _out_dir(args) -> Path:
    out = getattr(args, "out", None) or os.environ.get(OUT_DIR_ENV) or "."
    path = Path(out)
    path.mkdir(parents=True, exist_ok=True)
    return path


def _run_config(args, inputs: tuple[str, ...], out_dir: str) -> RunConfig:
    return RunConfig(
        command=args.command,
        inputs=inputs,
        output_dir=out_dir,
        alpha=getattr(args, "alpha", 0.2),
        beta=getattr(args, "beta", 0.2),
        epochs=getattr(args, "epochs", 500),
        seed=getattr(args, "seed", 0),
        shuffle=getattr(args, "shuffle", False),
        poly_degree=getattr(args, "poly_degree", 2),
        train_fraction=getattr(args, "train_fraction", 0.8),
    )


def _load_table(args):
    binding = None
    if getattr(args, "binding", None):
        binding = load_binding(Path(args.binding).read_text(encoding="utf-8"))
    csv_text = Path(args.data).read_text(encoding="utf-8")
    return load_observations(csv_text, binding)


def _canonical_columns(table):
    order = canonical_schema().input_elements
    return tuple(c for c in order if c in table.elements)


def _cmd_validate(args) -> int:
    source = Path(args.model).read_text(encoding="utf-8")
    instance = parse_model(source)
    report = validate_instance(instance)
    print(f"model: {instance.name}")
    print(f"valid: {'true' if report.valid else 'false'}")
    print(f"violations: {len(report.violations)}")
    for v in report.violations:
        print(f"  {v.code.value} {v.subject.value}: {v.detail}")
    return 0 if report.valid else 1


def _cmd_train(args) -> int:
    out_dir = _out_dir(args)
    inputs = (args.data,) + ((args.binding,) if args.binding else ())
    run = _run_config(args, inputs, str(out_dir))

    table = _load_table(args)
    elements = _canonical_columns(table)
    normalized, scaler = normalize(table)
    train, test = split(normalized, run.train_fraction)

    x_train, y_train = train.matrix(elements), train.profit_array
    x_test, y_test = test.matrix(elements), test.profit_array

    net = bel.BelNetwork.zeros(len(elements), run.bel_config())
    net, history = bel.fit(net, list(zip(x_train, y_train)))
    bel_pred = np.array([bel.predict(net, row) for row in x_test])

    poly = fit_polynomial(x_train, y_train, run.poly_degree)
    poly_pred = predict_polynomial(poly, x_test)

    snapshot_path = out_dir / "bel.snapshot"
    snapshot_path.write_text(
        bel.to_snapshot(net, header_comments=run.comment_lines()),
        encoding="utf-8")

    report = {
        "run_config": run.to_dict(),
        "columns": [c.value for c in elements],
        "train_periods": list(train.periods),
        "test_periods": list(test.periods),
        "metrics": {
            "bel": {"mse": mse(bel_pred, y_test),
                    "r2": r_squared(bel_pred, y_test)},
            "polynomial": {"mse": mse(poly_pred, y_test),
                           "r2": r_squared(poly_pred, y_test)},
        },
        "final_epoch_mse": history.epoch_mse[-1] if history.epoch_mse else None,
        "scaler": {
            "columns": {c.value: [s.lo, s.hi] for c, s in scaler.columns},
            "profit": [scaler.profit.lo, scaler.profit.hi],
        },
    }
    report_path = out_dir / "train_report.json"
    report_path.write_text(json.dumps(report, indent=2) + "\n", encoding="utf-8")

    print(f"wrote {snapshot_path}")
    print(f"wrote {report_path}")
    for model_name in ("bel", "polynomial"):
        m = report["metrics"][model_name]
        print(f"{model_name}: test mse={m['mse']:.6g} r2={m['r2']:.6g}")
    return 0


def _cmd_predict(args) -> int:
    out_dir = _out_dir(args)
    inputs = (args.data, args.net) + ((args.binding,) if args.binding else ())
    run = _run_config(args, inputs, str(out_dir))

    net = bel.from_snapshot(Path(args.net).read_text(encoding="utf-8"))
    table = _load_table(args)
    elements = _canonical_columns(table)
    if len(elements) != net.n_inputs:
        raise CogbmError(
            f"snapshot expects {net.n_inputs} input columns,"
            f" CSV provides {len(elements)}")
    normalized, scaler = normalize(table)

    rows = normalized.matrix(elements)
    pred_norm = np.array([bel.predict(net, row) for row in rows])
    pred_orig = scaler.profit.invert(pred_norm)

    lines = [f"# {c}" for c in run.comment_lines()]
    lines.append("period\tactual_profit\tpredicted_profit")
    for i, period in enumerate(table.periods):
        lines.append(f"{period}\t{table.profit[i]!r}\t{pred_orig[i]!r}")
    out_path = out_dir / "predictions.tsv"
    out_path.write_text("\n".join(lines) + "\n", encoding="utf-8")
    print(f"wrote {out_path}")
    return 0


def _cmd_ablate(args) -> int:
    out_dir = _out_dir(args)
    inputs = (args.data,) + ((args.binding,) if args.binding else ())
    run = _run_config(args, inputs, str(out_dir))

    table = _load_table(args)
    report = run_ablation(table, run.ablation_config())

    json_path = out_dir / "ablation.json"
    json_path.write_text(
        report_to_json(report, extra={"run_config": run.to_dict()}),
        encoding="utf-8")
    tsv_path = out_dir / "ablation.tsv"
    tsv_path.write_text(
        report_to_tsv(report, header_comments=run.comment_lines()),
        encoding="utf-8")

    print(f"wrote {json_path}")
    print(f"wrote {tsv_path}")
    for arm_name in ("baseline9", "cognitive14"):
        arm = getattr(report, arm_name)
        print(f"{arm_name}: bel mse={arm.bel.metrics.mse:.6g}"
              f" r2={arm.bel.metrics.r2:.6g} |"
              f" polynomial mse={arm.polynomial.metrics.mse:.6g}"
              f" r2={arm.polynomial.metrics.r2:.6g}")
    return 0


def _cmd_report(args) -> int:
    payload = json.loads(Path(args.ablation).read_text(encoding="utf-8"))

    print("ablation report")
    run = payload.get("run_config", {})
    if run:
        print("  run: " + " ".join(f"{k}={v}" for k, v in run.items()
                                   if k not in ("command", "output_dir")))
    print(f"  train periods: {len(payload['train_periods'])}"
          f" ({payload['train_periods'][0]}..{payload['train_periods'][-1]})")
    print(f"  test periods:  {len(payload['test_periods'])}"
          f" ({payload['test_periods'][0]}..{payload['test_periods'][-1]})")
    print()
    print(f"  {'input set':<12} {'model':<11} {'mse':>12} {'r2':>10}")
    for arm in ("baseline9", "cognitive14"):
        for model in ("bel", "polynomial"):
            m = payload[arm][model]
            print(f"  {arm:<12} {model:<11} {m['mse']:>12.6g} {m['r2']:>10.4f}")
    print()
    print("  rate of change (period over period)")
    header = (f"  {'period':<8} {'actual':>9}"
              f" {'b9 bel':>9} {'b9 poly':>9} {'c14 bel':>9} {'c14 poly':>9}")
    print(header)
    periods = payload["test_periods"][1:]
    for i, period in enumerate(periods):
        cells = [payload["actual_rate_of_change"][i]]
        for arm in ("baseline9", "cognitive14"):
            for model in ("bel", "polynomial"):
                cells.append(payload[arm][model]["rate_of_change"][i])
        print(f"  {period:<8}" + "".join(f" {c:>9.4f}" for c in cells))
    return 0


_COMMANDS = {
    "validate": _cmd_validate,
    "train": _cmd_train,
    "predict": _cmd_predict,
    "ablate": _cmd_ablate,
    "report": _cmd_report,
}


def run(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except ParseError as exc:
        print(f"error: line {exc.line}: {exc.kind}: {exc.message}",
              file=sys.stderr)
        return 2
    except (CogbmError, OSError, ValueError, json.JSONDecodeError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> int:
    return run()


if __name__ == "__main__":
    sys.exit(main())
