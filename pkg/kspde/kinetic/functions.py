"""
Kinetic function f = 1_{u > xi}, chi = 1_{u > xi} - 1_{0 > xi}, and the
chain-rule consistency check for the parabolic dissipation.
"""

from typing import Callable

import numpy as np

from kspde.field import Field
from kspde.kinetic.xi_grid import XiGrid
from kspde.model.spec import gauss_integral
from kspde.solver.operators import value_range

ScalarFn = Callable[[np.ndarray], np.ndarray]


def kinetic_function(u: Field, xi: XiGrid) -> np.ndarray:
    """0/1 array of shape (points, xi cells): 1 where u(x) > xi centre."""
    xi.ensure_covers(*value_range(u.values))
    return (u.values.reshape(-1, 1) > xi.centers[None, :]).astype(np.int8)


def chi_function(u: Field, xi: XiGrid) -> np.ndarray:
    """-1/0/1 array; sum over xi times the cell width recovers u within one cell."""
    below_zero = (xi.centers < 0).astype(np.int8)
    return kinetic_function(u, xi) - below_zero[None, :]


def kinetic_average(u: Field, xi: XiGrid, eta: ScalarFn) -> np.ndarray:
    """int chi_u(xi) eta(xi) dxi per grid point."""
    chi = chi_function(u, xi)
    return (chi @ eta(xi.centers)) * xi.width


def layer_cake(u: Field, xi: XiGrid) -> np.ndarray:
    """Reconstruction sum_xi chi * width, shaped like the grid."""
    return (chi_function(u, xi).sum(axis=1) * xi.width).reshape(u.grid.shape)


def chain_rule_residual(u: Field, phi1: ScalarFn, phi2: ScalarFn, sigma: ScalarFn) -> float:
    """
    max |grad_h int_0^u phi1 phi2 sigma - phi1(u) grad_h int_0^u phi2 sigma| over the grid
    and all axes, with centred differences. The residual is O(h) for smooth u.
    """
    inner = gauss_integral(lambda z: phi2(z) * sigma(z), u.values)
    outer = gauss_integral(lambda z: phi1(z) * phi2(z) * sigma(z), u.values)
    h = u.grid.spacing
    worst = 0.0
    for axis in range(u.grid.dim):
        d_inner = (np.roll(inner, -1, axis=axis) - np.roll(inner, 1, axis=axis)) / (2.0 * h)
        d_outer = (np.roll(outer, -1, axis=axis) - np.roll(outer, 1, axis=axis)) / (2.0 * h)
        worst = max(worst, float(np.max(np.abs(d_outer - phi1(u.values) * d_inner))))
    return worst
