"""
Gagliardo seminorm on the discrete torus.
"""

import itertools

import numpy as np

from kspde.errors import InvalidExponent
from kspde.field import Field


def torus_distance(shift: np.ndarray, spacing: float, points: int) -> float:
    wrapped = np.minimum(np.abs(shift), points - np.abs(shift))
    return float(np.sqrt(np.sum(wrapped ** 2)) * spacing)


def fractional_sobolev_seminorm(f: Field, s: float, r: float) -> float:
    """
    sum_{x != y} |f(x) - f(y)|^r / d(x, y)^(N + s r) h^(2N), d the torus distance.

    Pairs are enumerated by lattice shift, so the cost is points^(2N).
    """
    if not 0 < s < 1:
        raise InvalidExponent(f"Smoothness s must lie in (0, 1), got {s}")
    if r < 1:
        raise InvalidExponent(f"Integrability r must be >= 1, got {r}")
    grid = f.grid
    points = grid.points_per_dim
    exponent = grid.dim + s * r
    total = 0.0
    for shift in itertools.product(range(points), repeat=grid.dim):
        if not any(shift):
            continue
        shifted = np.roll(f.values, shift=tuple(-k for k in shift), axis=tuple(range(grid.dim)))
        difference = np.sum(np.abs(f.values - shifted) ** r)
        total += difference / torus_distance(np.asarray(shift), grid.spacing, points) ** exponent
    return float(total * grid.cell_volume ** 2)
