"""Seeded synthetic observation tables for experiments and tests.

Each of the 14 input elements gets an indicator series drawn uniformly on its
own arbitrary scale (random offset and span per column, so normalization has
real work to do). Profit is a positive weighted sum of the underlying
unit-interval values plus Gaussian noise whose standard deviation is
``noise`` times the profit amplitude. By default the five cognitive columns
carry substantially heavier weights than the nine classic columns, so the
extra inputs hold genuine signal that a nine-input model cannot see.
"""

from __future__ import annotations

import numpy as np

from .observations import ObservationTable
from .ontology import canonical_schema

PROFIT_BASE = 1000.0
PROFIT_AMPLITUDE = 5000.0


def make_observation_table(seed: int,
                           periods: int = 40,
                           noise: float = 0.01,
                           base_weights: tuple[float, float] = (0.1, 0.4),
                           cognitive_weights: tuple[float, float] = (1.5, 2.5),
                           start_year: int = 2008) -> ObservationTable:
    """Generate a deterministic synthetic table with all 14 input columns.

    ``base_weights`` and ``cognitive_weights`` are (low, high) ranges for the
    profit weights of the nine classic and five cognitive columns. Setting
    ``cognitive_weights=(0.0, 0.0)`` produces profit that depends only on the
    classic nine.
    """
    rng = np.random.default_rng(seed)
    schema = canonical_schema()
    n_inputs = len(schema.input_elements)

    unit = rng.uniform(0.0, 1.0, size=(periods, n_inputs))
    weights = np.concatenate([
        rng.uniform(base_weights[0], base_weights[1], size=9),
        rng.uniform(cognitive_weights[0], cognitive_weights[1],
                    size=n_inputs - 9),
    ])
    total = weights.sum()
    quality = unit @ weights / total if total > 0 else np.zeros(periods)

    offsets = rng.uniform(-50.0, 50.0, size=n_inputs)
    spans = rng.uniform(10.0, 1000.0, size=n_inputs)
    indicators = offsets + spans * unit

    profit = (PROFIT_BASE + PROFIT_AMPLITUDE * quality
              + rng.normal(0.0, noise * PROFIT_AMPLITUDE, size=periods))

    columns = tuple(
        (concept, tuple(indicators[:, j]))
        for j, concept in enumerate(schema.input_elements))
    labels = tuple(str(start_year + i) for i in range(periods))
    return ObservationTable(labels, columns, tuple(profit))
