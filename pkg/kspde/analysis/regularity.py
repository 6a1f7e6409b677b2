"""
Empirical regularity of velocity averages from the decay of Littlewood-Paley
block norms of eta_bar(u) in L^r(Omega x [0, T] x T^N).
"""

import logging
from typing import Dict, List, Optional, Sequence

import numpy as np
from pydantic import BaseModel, Field as PydanticField

from kspde.analysis.littlewood_paley import block_norms, lattice_levels, littlewood_paley_blocks
from kspde.errors import InsufficientResolution
from kspde.kinetic import KineticMeasureHistogram
from kspde.model import Localization
from kspde.solver import Trajectory

logger = logging.getLogger(__name__)

MIN_FIT_LEVELS = 4
SMOOTHNESS_CAP = 1.0
ACCEPTANCE_FACTOR = 0.9
NORM_FLOOR = 1e-14


class RegularityReport(BaseModel):
    levels: List[int] = PydanticField(..., description="Dyadic levels J used in the fit")
    block_norms: List[float] = PydanticField(..., description="E ||(eta_bar(u))_J||_{L^r_{t,x}} per fitted level")
    slope: float = PydanticField(..., description="Slope of log block norm against log J")
    s_emp: float = PydanticField(..., description="-slope, capped at SMOOTHNESS_CAP")
    s_bound: float = PydanticField(..., description="Predicted lower bound on attainable smoothness")
    r: float = PydanticField(..., description="Integrability exponent of the block norms")
    passed: bool = PydanticField(..., description="s_emp >= 0.9 s_bound")
    theta_eta_final: float = PydanticField(..., description="E int Theta_eta(|u(T)|) dx")
    eta_bar_initial: float = PydanticField(..., description="E int eta_bar(|u0|) dx")
    weighted_measure_mass: Optional[float] = PydanticField(
        None, description="E sum m theta (eta + |eta'|) over the kinetic measure"
    )


def spacetime_block_norms(trajectory: Trajectory, localization: Localization, r: float) -> Dict[int, float]:
    """sum_i (t_i - t_{i-1}) ||(eta_bar(u(t_i)))_J||_r^r for one member; the initial state is skipped."""
    if len(trajectory) < 2:
        raise InsufficientResolution("Regularity fit needs at least two recorded states")
    totals: Dict[int, float] = {}
    steps = np.diff(trajectory.times)
    for dt, state in zip(steps, trajectory.states[1:]):
        averaged = state.with_values(localization.eta_bar(state.values))
        for level, norm in block_norms(littlewood_paley_blocks(averaged), r).items():
            totals[level] = totals.get(level, 0.0) + float(dt) * norm ** r
    return totals


def weighted_measure_mass(histogram: KineticMeasureHistogram, localization: Localization) -> float:
    xi = histogram.xi.centers
    weight = localization.theta(xi) * (localization.eta_values(xi) + np.abs(localization.eta_prime(xi)))
    return float(histogram.xi_marginal() @ weight)


def regularity_exponent_fit(
    trajectories: Sequence[Trajectory],
    localization: Localization,
    s_bound: float,
    r: float = 1.0,
    histograms: Optional[Sequence[KineticMeasureHistogram]] = None,
) -> RegularityReport:
    """
    Fit E ||(eta_bar(u))_J|| ~ J^(-s) over the middle dyadic levels.

    The lowest and the grid-limited top level are left out of the fit.

    Raises:
        InsufficientResolution: fewer than MIN_FIT_LEVELS usable levels
    """
    grid = trajectories[0].config.grid
    levels = lattice_levels(grid)[1:-1]
    if len(levels) < MIN_FIT_LEVELS:
        raise InsufficientResolution(
            f"{grid.points_per_dim} points resolve only {len(levels)} middle dyadic levels, need {MIN_FIT_LEVELS}"
        )

    per_member = [spacetime_block_norms(traj, localization, r) for traj in trajectories]
    norms = np.asarray([np.mean([member[J] for member in per_member]) ** (1.0 / r) for J in levels])
    floored = np.maximum(norms, NORM_FLOOR * max(float(norms.max()), NORM_FLOOR))
    slope = float(np.polyfit(np.log(levels), np.log(floored), 1)[0])
    s_emp = min(-slope, SMOOTHNESS_CAP)
    passed = bool(s_emp >= ACCEPTANCE_FACTOR * s_bound)

    theta_final = np.mean(
        [np.sum(localization.theta_eta(np.abs(t.final.values))) * grid.cell_volume for t in trajectories]
    )
    eta_bar_initial = np.mean(
        [np.sum(localization.eta_bar(np.abs(t.initial.values))) * grid.cell_volume for t in trajectories]
    )
    measure_mass = None
    if histograms:
        measure_mass = float(np.mean([weighted_measure_mass(h, localization) for h in histograms]))

    if not passed:
        logger.warning(f"Regularity fit gave s_emp={s_emp:.4g} below 0.9 * {s_bound:.4g}")
    else:
        logger.info(f"Regularity fit: s_emp={s_emp:.4g} (bound {s_bound:.4g}) over J={levels}")
    return RegularityReport(
        levels=list(levels),
        block_norms=norms.tolist(),
        slope=slope,
        s_emp=s_emp,
        s_bound=s_bound,
        r=r,
        passed=passed,
        theta_eta_final=float(theta_final),
        eta_bar_initial=float(eta_bar_initial),
        weighted_measure_mass=measure_mass,
    )
