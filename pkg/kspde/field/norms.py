"""
Discrete norms on the torus (midpoint Riemann sums at the grid points).
"""

import math

import numpy as np

from kspde.errors import InvalidExponent
from kspde.field.grid import Field


def lp_norm(f: Field, p: float) -> float:
    """(h^N sum |u|^p)^(1/p); p = math.inf gives max |u|."""
    if p == math.inf:
        return float(np.max(np.abs(f.values))) if f.values.size else 0.0
    if not p >= 1:
        raise InvalidExponent(f"Norm exponent must be >= 1 or inf, got {p}")
    total = np.sum(np.abs(f.values) ** p) * f.grid.cell_volume
    return float(total ** (1.0 / p))


def l1_norm(f: Field) -> float:
    return float(np.sum(np.abs(f.values)) * f.grid.cell_volume)


def l2_norm(f: Field) -> float:
    return float(np.sqrt(np.sum(f.values ** 2) * f.grid.cell_volume))


def positive_part_l1(f: Field, g: Field) -> float:
    """Riemann sum of max(f - g, 0)."""
    f.grid.ensure_same(g.grid)
    return float(np.sum(np.maximum(f.values - g.values, 0.0)) * f.grid.cell_volume)
