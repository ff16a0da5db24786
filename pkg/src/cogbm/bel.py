"""Brain-emotional-learning (BEL) regressor.

The network mirrors the limbic circuit it is named after. A stimulus vector
``s`` (normalized element indicators in [0, 1]) fans out to two subsystems:

* the amygdala holds one excitatory weight per sensory input plus one for a
  coarse thalamic channel carrying ``max(s)``; its node outputs are
  ``A_i = s_i * v_i`` and ``A_th = max(s) * v_th``;
* the orbitofrontal cortex holds one inhibitory weight per sensory input
  (no thalamic channel) with node outputs ``O_i = s_i * w_i``.

The model output is ``E = sum(A) - sum(O)``. Training compares E against a
reward signal (here: normalized profit). Amygdala weights only ever grow,

    dv_i  = alpha * s_i    * max(0, rew - sum(A))
    dv_th = alpha * max(s) * max(0, rew - sum(A))

so once the excitatory side covers the reward it stays put, while the
orbitofrontal side learns to cancel whatever mismatch remains,

    dw_i = beta * s_i * (E - rew),

with no sign clamp. For a fixed sample this makes sum(A) ratchet up until it
majorizes the reward and then freezes, after which the error contracts
geometrically by the factor ``1 - beta * |s|^2`` per step.

Networks are immutable values: ``train_step`` and ``fit`` return new networks
and never mutate their inputs, so fits on different networks can safely run
concurrently. All arithmetic is plain float64 in a fixed order, so identical
inputs give bit-identical weights.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace
from typing import Iterable, Sequence

import numpy as np

from .errors import (
    CogbmError,
    DimensionMismatchError,
    EmptyDatasetError,
    EmptyStimulusError,
    NonFiniteRewardError,
    ParseError,
)


@dataclass(frozen=True)
class BelConfig:
    """Learning configuration.

    ``epochs`` may be zero (a no-op fit). ``shuffle`` turns on per-epoch
    reshuffling of the sample order, seeded by ``seed``; the default presents
    samples in the given order, which is what time-series training wants.
    """

    alpha: float = 0.2
    beta: float = 0.2
    epochs: int = 500
    seed: int = 0
    shuffle: bool = False

    def __post_init__(self):
        if not (0.0 < self.alpha <= 1.0):
            raise ValueError("alpha must be in (0, 1]")
        if not (0.0 < self.beta <= 1.0):
            raise ValueError("beta must be in (0, 1]")
        if self.epochs < 0:
            raise ValueError("epochs must be >= 0")


def _as_stimulus(s, n: int | None = None) -> np.ndarray:
    arr = np.asarray(s, dtype=float)
    if arr.ndim != 1:
        raise DimensionMismatchError(f"stimulus must be 1-d, got shape {arr.shape}")
    if arr.size == 0:
        raise EmptyStimulusError("stimulus vector has no components")
    if n is not None and arr.size != n:
        raise DimensionMismatchError(
            f"stimulus has {arr.size} components, network expects {n}")
    return arr


@dataclass(frozen=True, eq=False)
class BelNetwork:
    """Immutable weight state: sensory/thalamic amygdala weights and
    orbitofrontal weights, plus the learning configuration."""

    v: np.ndarray
    v_th: float
    w: np.ndarray
    config: BelConfig

    def __post_init__(self):
        v = np.array(self.v, dtype=float)
        w = np.array(self.w, dtype=float)
        if v.ndim != 1 or w.ndim != 1 or v.size != w.size:
            raise DimensionMismatchError("v and w must be 1-d and equally long")
        if v.size == 0:
            raise EmptyStimulusError("network needs at least one input")
        if not (np.all(np.isfinite(v)) and np.all(np.isfinite(w))
                and math.isfinite(self.v_th)):
            raise ValueError("weights must be finite")
        v.setflags(write=False)
        w.setflags(write=False)
        object.__setattr__(self, "v", v)
        object.__setattr__(self, "w", w)
        object.__setattr__(self, "v_th", float(self.v_th))

    @classmethod
    def zeros(cls, n_inputs: int, config: BelConfig | None = None) -> "BelNetwork":
        if n_inputs < 1:
            raise EmptyStimulusError("network needs at least one input")
        return cls(np.zeros(n_inputs), 0.0, np.zeros(n_inputs),
                   config or BelConfig())

    @property
    def n_inputs(self) -> int:
        return int(self.v.size)


@dataclass(frozen=True, eq=False)
class ForwardTrace:
    """One forward pass: thalamic signal, per-node outputs, model output.

    ``a`` has length n+1 with the thalamic node last; ``e`` equals
    ``sum(a) - sum(o)`` exactly as computed. ``rew`` is filled in by
    train_step with the reward the trace was scored against.
    """

    th: float
    a: np.ndarray
    o: np.ndarray
    e: float
    rew: float | None = None


@dataclass(frozen=True)
class TrainingHistory:
    """Per-epoch mean squared output error, measured pre-update."""

    epoch_mse: tuple[float, ...]


def thalamus_signal(s) -> float:
    """The coarse thalamic channel: the maximum stimulus component."""
    return float(np.max(_as_stimulus(s)))


def forward(net: BelNetwork, s) -> ForwardTrace:
    """Run one forward pass without learning."""
    s = _as_stimulus(s, net.n_inputs)
    th = float(np.max(s))
    a = np.append(s * net.v, th * net.v_th)
    o = s * net.w
    e = float(np.sum(a) - np.sum(o))
    return ForwardTrace(th=th, a=a, o=o, e=e)


def predict(net: BelNetwork, s) -> float:
    """The model output for a stimulus (predicted normalized profit)."""
    return forward(net, s).e


def train_step(net: BelNetwork, s, rew: float) -> tuple[BelNetwork, ForwardTrace]:
    """One reward-driven update. Returns the new network and the
    pre-update trace (with ``rew`` recorded)."""
    rew = float(rew)
    if not math.isfinite(rew):
        raise NonFiniteRewardError(f"reward {rew!r} is not finite")
    s = _as_stimulus(s, net.n_inputs)
    trace = forward(net, s)

    cfg = net.config
    gain = max(0.0, rew - float(np.sum(trace.a)))
    v = net.v + cfg.alpha * s * gain
    v_th = net.v_th + cfg.alpha * trace.th * gain
    w = net.w + cfg.beta * s * (trace.e - rew)

    updated = BelNetwork(v, v_th, w, cfg)
    return updated, replace(trace, rew=rew)


def fit(net: BelNetwork,
        samples: Sequence[tuple[Iterable[float], float]],
        config: BelConfig | None = None) -> tuple[BelNetwork, TrainingHistory]:
    """Train for ``config.epochs`` passes over ``samples``.

    Samples are (stimulus, reward) pairs of uniform dimension. Presentation
    follows sample order unless ``config.shuffle`` is set, in which case the
    order is reshuffled each epoch by a generator seeded with ``config.seed``.
    Deterministic for fixed inputs and config.
    """
    config = config or net.config
    if config is not net.config:
        net = BelNetwork(net.v, net.v_th, net.w, config)
    samples = list(samples)
    if not samples:
        raise EmptyDatasetError("fit needs at least one sample")
    prepared = [(_as_stimulus(s, net.n_inputs), float(rew)) for s, rew in samples]

    rng = np.random.default_rng(config.seed)
    order = np.arange(len(prepared))
    history: list[float] = []
    for _ in range(config.epochs):
        if config.shuffle:
            rng.shuffle(order)
        sq_errors = 0.0
        for i in order:
            s, rew = prepared[i]
            net, trace = train_step(net, s, rew)
            sq_errors += (trace.e - rew) ** 2
        history.append(sq_errors / len(prepared))
    return net, TrainingHistory(tuple(history))


# --- snapshot serialization -------------------------------------------------
#
# Flat key-value text, one pair per line, full round-trip decimal precision.
# Lines starting with '#' are comments and are ignored on load.

def to_snapshot(net: BelNetwork, header_comments: Sequence[str] = ()) -> str:
    lines = [f"# {c}" for c in header_comments]
    cfg = net.config
    lines += [
        f"n={net.n_inputs}",
        f"alpha={cfg.alpha!r}",
        f"beta={cfg.beta!r}",
        f"epochs={cfg.epochs}",
        f"seed={cfg.seed}",
        f"shuffle={'true' if cfg.shuffle else 'false'}",
    ]
    lines += [f"v[{i}]={x!r}" for i, x in enumerate(net.v)]
    lines.append(f"v_th={net.v_th!r}")
    lines += [f"w[{i}]={x!r}" for i, x in enumerate(net.w)]
    return "\n".join(lines) + "\n"


def from_snapshot(text: str) -> BelNetwork:
    """Rebuild a network from snapshot text. Raises ParseError."""
    pairs: dict[str, str] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        key, sep, value = line.partition("=")
        if not sep or not key:
            raise ParseError(lineno, ParseError.KIND_SYNTAX,
                             "expected key=value")
        pairs[key.strip()] = value.strip()

    def need(key: str) -> str:
        if key not in pairs:
            raise ParseError(1, ParseError.KIND_SYNTAX,
                             f"snapshot is missing {key!r}")
        return pairs[key]

    try:
        n = int(need("n"))
        config = BelConfig(
            alpha=float(need("alpha")),
            beta=float(need("beta")),
            epochs=int(need("epochs")),
            seed=int(need("seed")),
            shuffle=need("shuffle") == "true",
        )
        v = np.array([float(need(f"v[{i}]")) for i in range(n)])
        w = np.array([float(need(f"w[{i}]")) for i in range(n)])
        v_th = float(need("v_th"))
    except (ValueError, CogbmError) as exc:
        if isinstance(exc, ParseError):
            raise
        raise ParseError(1, ParseError.KIND_SYNTAX,
                         f"bad snapshot value: {exc}") from None
    return BelNetwork(v, v_th, w, config)
