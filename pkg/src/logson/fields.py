"""Seeded test-field corpus and small profile utilities.

The verification suite exercises inequalities and projections on random
smooth radial profiles. Fields are built from symmetrized Gaussian bumps
so they are genuinely even across the origin and decay well inside the
truncation radius, keeping every quadrature in its accurate regime.
"""

from __future__ import annotations

import numpy as np

from logson.grid import Field, RadialGrid


def random_smooth_field(grid: RadialGrid, seed: int, max_bumps: int = 3) -> Field:
    """Random even, smooth, decaying profile; deterministic in `seed`."""
    rng = np.random.default_rng(seed)
    r = grid.nodes
    values = np.zeros(grid.m)
    for _ in range(int(rng.integers(1, max_bumps + 1))):
        amp = rng.uniform(0.3, 2.0) * rng.choice((-1.0, 1.0))
        center = rng.uniform(0.0, min(3.0, 0.25 * grid.r_max))
        width = rng.uniform(0.5, 1.5)
        values += amp * (
            np.exp(-((r - center) ** 2) / (2.0 * width**2))
            + np.exp(-((r + center) ** 2) / (2.0 * width**2))
        )
    if not np.any(values):
        values = np.exp(-(r**2))
    return Field(grid, values)
