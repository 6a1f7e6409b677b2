"""
Accumulation of kinetic measure histograms along a trajectory.

Parabolic dissipation deposits |grad_h Psi(u)|^2 h^N dt, Psi = int sigma^{kappa,tau},
at xi = u(x). The entropy defect of the convection update is measured with
the semi-Kruzkov entropies (u - c)^+ at every xi-cell centre c: for a
monotone scheme u* = H(u) the cell entropy inequality

    (u*_j - c)^+ <= (u_j - c)^+ - (dt/h) (Q_c(u_j, u_{j+1}) - Q_c(u_{j-1}, u_j)),
    Q_c(a, b) = F(a v c, b v c) - F(c, c),

holds, and the gap is the defect density at level c.
"""

import logging
from typing import Optional

import numpy as np
import scipy.sparse as sp

from kspde.model import ModelSpec
from kspde.models import FluxScheme, MeasureComponent
from kspde.kinetic.histogram import KineticMeasureHistogram
from kspde.kinetic.xi_grid import XiGrid
from kspde.noise import NoiseModel
from kspde.solver import Solver, Trajectory
from kspde.solver.operators import (
    central_gradient_squared,
    engquist_osher_flux,
    lax_friedrichs_flux,
    value_range,
)

logger = logging.getLogger(__name__)

CLIP_WARNING_FRACTION = 0.05


def _trajectory_range(traj: Trajectory):
    values = traj.values()
    return float(values.min()), float(values.max())


def accumulate_parabolic_dissipation(
    traj: Trajectory, xi: XiGrid, model: Optional[ModelSpec] = None
) -> KineticMeasureHistogram:
    """Deposit |grad_h Psi(u_i)|^2 h^N (t_{i+1} - t_i) into the xi cell of u_i(x)."""
    model = model or traj.config.model
    xi.ensure_covers(*_trajectory_range(traj))
    grid = traj.config.grid
    x_cells = grid.size
    rows, cols, values = [], [], []
    for i in range(len(traj.times) - 1):
        u = traj.states[i].values
        dt = traj.times[i + 1] - traj.times[i]
        density = central_gradient_squared(model.psi(u), grid.spacing).ravel() * grid.cell_volume * dt
        rows.append(i * x_cells + np.arange(x_cells))
        cols.append(xi.nearest_cell(u.ravel()))
        values.append(density)
    return _build(xi, traj, x_cells, rows, cols, values, MeasureComponent.PARABOLIC)


def accumulate_entropy_defect(traj: Trajectory, xi: XiGrid) -> KineticMeasureHistogram:
    """Clipped semi-Kruzkov defect of every convection substep (needs record_every = 1)."""
    if traj.record_every != 1:
        raise ValueError("Entropy defect needs every step recorded (record_every = 1)")
    xi.ensure_covers(*_trajectory_range(traj))
    config = traj.config
    solver = Solver(config)
    spec = config.model
    grid = config.grid
    levels = xi.centers
    ratio = traj.dt / grid.spacing
    directions = spec.direction(grid.dim)
    x_cells = grid.size
    weight = grid.cell_volume * xi.width

    rows, cols, values = [], [], []
    clipped = 0.0
    for i in range(len(traj.times) - 1):
        u = traj.states[i].values
        u_star = solver.convection_substep(traj.states[i], traj.dt).values
        lo, hi = value_range(u)
        speed = spec.max_speed(lo, hi)

        lifted = np.maximum(u[..., None], levels)
        residual = np.maximum(u[..., None] - levels, 0.0) - np.maximum(u_star[..., None] - levels, 0.0)
        floor_flux = _numerical_flux(spec, levels, levels, 1.0, config.flux_scheme, speed)
        for axis, d in enumerate(directions):
            right = np.roll(lifted, -1, axis=axis)
            q = _numerical_flux(spec, lifted, right, d, config.flux_scheme, speed) - d * floor_flux
            residual -= ratio * (q - np.roll(q, 1, axis=axis))

        residual = residual.reshape(x_cells, xi.cells) * weight
        clipped += float(-residual[residual < 0].sum())
        positive = np.maximum(residual, 0.0)
        r, c = np.nonzero(positive)
        rows.append(i * x_cells + r)
        cols.append(c)
        values.append(positive[r, c])

    hist = _build(xi, traj, x_cells, rows, cols, values, MeasureComponent.ENTROPY_DEFECT, clipped)
    total = hist.total()
    if total > 0 and clipped > CLIP_WARNING_FRACTION * total:
        logger.warning(f"Clipped {clipped:.3g} of negative entropy defect against {total:.3g} retained")
    return hist


def _numerical_flux(spec, left, right, direction, scheme, speed):
    if scheme == FluxScheme.ENGQUIST_OSHER:
        return engquist_osher_flux(spec, left, right, direction)
    return lax_friedrichs_flux(spec, left, right, direction, speed)


def ito_correction(traj: Trajectory, xi: XiGrid, noise: Optional[NoiseModel] = None) -> sp.csr_matrix:
    """1/2 G^2(x, u) h^N dt deposited at xi = u(x), on the histogram layout."""
    noise = noise or traj.config.noise
    grid = traj.config.grid
    x_cells = grid.size
    rows, cols, values = [], [], []
    for i in range(len(traj.times) - 1):
        state = traj.states[i]
        dt = traj.times[i + 1] - traj.times[i]
        g = noise.coefficients_on(state) if noise.mode_count else np.zeros((1,) + grid.shape)
        density = 0.5 * np.sum(g ** 2, axis=0).ravel() * grid.cell_volume * dt
        rows.append(i * x_cells + np.arange(x_cells))
        cols.append(xi.nearest_cell(state.values.ravel()))
        values.append(density)
    shape = ((len(traj.times) - 1) * x_cells, xi.cells)
    if not rows:
        return sp.csr_matrix(shape)
    return sp.coo_matrix(
        (np.concatenate(values), (np.concatenate(rows), np.concatenate(cols))), shape=shape
    ).tocsr()


def signed_measure(m: KineticMeasureHistogram, correction: sp.csr_matrix) -> sp.csr_matrix:
    """q = m - 1/2 G^2 delta_{u = xi}, a signed matrix on the histogram layout."""
    return (m.mass - correction).tocsr()


def _build(xi, traj, x_cells, rows, cols, values, component, clipped=0.0) -> KineticMeasureHistogram:
    if rows:
        rows_a, cols_a, values_a = np.concatenate(rows), np.concatenate(cols), np.concatenate(values)
    else:
        rows_a = cols_a = np.zeros(0, dtype=int)
        values_a = np.zeros(0)
    return KineticMeasureHistogram.from_deposits(
        xi, traj.times, x_cells, rows_a, cols_a, values_a, component, clipped
    )
