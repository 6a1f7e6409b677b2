"""
L^p moment estimates: E sup_t ||u(t)||_p^{pq} against 1 + E ||u0||_p^{pq}.
"""

import logging
from typing import Dict, List, Sequence

import numpy as np
from pydantic import BaseModel, Field as PydanticField

from kspde.field import Field, lp_norm
from kspde.noise import NoiseModel
from kspde.noise.factory import NoiseFactory
from kspde.solver import Trajectory

logger = logging.getLogger(__name__)

STABILITY_FACTOR = 2.0


class MomentLevel(BaseModel):
    dt: float = PydanticField(..., description="Time step of the ensemble")
    sup_moment: float = PydanticField(..., description="E sup_t ||u(t)||_p^{pq}")
    sup_moment_stderr: float = PydanticField(..., description="Standard error of sup_moment")
    initial_moment: float = PydanticField(..., description="E ||u0||_p^{pq}")
    ratio: float = PydanticField(..., description="sup_moment / (1 + initial_moment)")


class LpMomentReport(BaseModel):
    p: float = PydanticField(..., description="Spatial exponent")
    q: float = PydanticField(..., description="Moment exponent")
    levels: List[MomentLevel] = PydanticField(..., description="One entry per dt")
    spread: float = PydanticField(..., description="max ratio / min ratio across dt")
    passed: bool = PydanticField(..., description="Ratios stable within a factor 2")


def sup_moment(trajectories: Sequence[Trajectory], p: float, q: float) -> np.ndarray:
    """sup over recorded times of ||u(t)||_p^{pq}, one value per member."""
    return np.asarray([max(lp_norm(u, p) for u in traj.states) ** (p * q) for traj in trajectories])


def moment_level(trajectories: Sequence[Trajectory], p: float, q: float) -> MomentLevel:
    sups = sup_moment(trajectories, p, q)
    initial = np.asarray([lp_norm(traj.initial, p) ** (p * q) for traj in trajectories])
    members = len(sups)
    stderr = float(sups.std(ddof=1) / np.sqrt(members)) if members > 1 else 0.0
    mean_initial = float(initial.mean())
    return MomentLevel(
        dt=trajectories[0].dt,
        sup_moment=float(sups.mean()),
        sup_moment_stderr=stderr,
        initial_moment=mean_initial,
        ratio=float(sups.mean() / (1.0 + mean_initial)),
    )


def lp_moment_check(ensembles: Dict[float, Sequence[Trajectory]], p: float, q: float) -> LpMomentReport:
    """Ratios per dt level; passes when no dt refinement moves the ratio by more than a factor 2."""
    if not 1 <= p <= 4 or not 1 <= q <= 4:
        raise ValueError(f"p and q must lie in [1, 4], got p={p}, q={q}")
    levels = [moment_level(ensembles[dt], p, q) for dt in sorted(ensembles, reverse=True)]
    ratios = np.asarray([level.ratio for level in levels])
    if np.all(ratios == 0):
        spread = 1.0
    elif np.any(ratios <= 0):
        spread = float("inf")
    else:
        spread = float(ratios.max() / ratios.min())
    passed = bool(np.all(np.isfinite(ratios)) and spread <= STABILITY_FACTOR)
    logger.info(f"L^{p} moment ratios {ratios.tolist()} (spread {spread:.3g})")
    return LpMomentReport(p=p, q=q, levels=levels, spread=spread, passed=passed)


def additive_second_moment(u0: Field, noise: NoiseModel, t: float) -> float:
    """
    E ||u(t)||_2^2 = ||u0||_2^2 + t sum_k alpha_k^2 ||e_k||_2^2 for du = sum_k alpha_k e_k dB_k.
    """
    family = NoiseFactory.create_family(noise.family)
    theta = sum(u0.coordinates())
    total = float(np.sum(u0.values ** 2) * u0.grid.cell_volume)
    for index, a in enumerate(noise.alpha):
        k = index + 1
        shape = family.spatial(k, theta, u0.grid.dim) * family.profile(k, np.zeros_like(theta))
        total += t * a * a * float(np.sum(shape ** 2) * u0.grid.cell_volume)
    return total
