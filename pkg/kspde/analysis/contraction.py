"""
L^1 contraction of coupled trajectories.
"""

import logging

import numpy as np
from pydantic import BaseModel, Field as PydanticField

from kspde.errors import CouplingMismatch, GridMismatch
from kspde.field import positive_part_l1
from kspde.solver import Trajectory

logger = logging.getLogger(__name__)

HALVING_RATIO_RANGE = (0.35, 0.65)
EXCESS_FLOOR = 1e-12
NOISE_SLACK = 3.0


class HalvingReport(BaseModel):
    coarse_excess: float = PydanticField(..., description="E gap(T) - gap(0) at dt")
    fine_excess: float = PydanticField(..., description="E gap(T) - gap(0) at dt/2")
    ratio: float = PydanticField(..., description="max(fine, 0) / max(coarse, floor)")
    within_noise: bool = PydanticField(..., description="Both excesses within 3 standard errors of zero")
    passed: bool = PydanticField(..., description="Ratio in [0.35, 0.65] or both excesses within noise")

    @property
    def detail(self) -> str:
        if self.within_noise:
            return "both excesses within 3 stderr of zero; halving ratio not resolved"
        return f"excess {self.coarse_excess:.4g} -> {self.fine_excess:.4g}, ratio {self.ratio:.3f}"


def contraction_gap(first: Trajectory, second: Trajectory) -> np.ndarray:
    """
    ||(u_1(t) - u_2(t))^+||_1 at every recorded time.

    Both runs must have been driven by the same Wiener path.
    """
    if first.seed != second.seed:
        raise CouplingMismatch(f"Trajectories use different noise seeds ({first.seed} vs {second.seed})")
    first.config.grid.ensure_same(second.config.grid)
    if first.times.shape != second.times.shape or not np.allclose(first.times, second.times):
        raise GridMismatch("Trajectories were recorded at different times")
    return np.asarray([positive_part_l1(a, b) for a, b in zip(first.states, second.states)])


def dt_halving_check(
    coarse_excess: float, coarse_stderr: float, fine_excess: float, fine_stderr: float
) -> HalvingReport:
    """
    The contraction excess of a first-order scheme should halve with dt.

    Passes when max(fine, 0) / max(coarse, floor) lies in [0.35, 0.65], or when
    both excesses are indistinguishable from zero at three standard errors.
    """
    within_noise = (
        abs(coarse_excess) <= NOISE_SLACK * coarse_stderr and abs(fine_excess) <= NOISE_SLACK * fine_stderr
    )
    ratio = max(fine_excess, 0.0) / max(coarse_excess, EXCESS_FLOOR)
    lo, hi = HALVING_RATIO_RANGE
    passed = within_noise or lo <= ratio <= hi
    logger.debug(f"dt halving: excess {coarse_excess:.4g} -> {fine_excess:.4g}, ratio {ratio:.3f}")
    return HalvingReport(
        coarse_excess=coarse_excess,
        fine_excess=fine_excess,
        ratio=ratio,
        within_noise=within_noise,
        passed=passed,
    )
