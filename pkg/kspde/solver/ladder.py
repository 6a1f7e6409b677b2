"""
Vanishing-viscosity ladder: the approximations u^kappa for a decreasing
list of kappa, driven by shared noise, should form a Cauchy sequence in
L^1 over (t, x).
"""

import logging
from typing import List, Sequence

import numpy as np
from pydantic import BaseModel, Field as PydanticField

from kspde.field import Field
from kspde.noise import member_seed
from kspde.solver.config import SolverConfig
from kspde.solver.scheme import Trajectory, solve

logger = logging.getLogger(__name__)

LADDER_SLACK = 1.1


class CauchyReport(BaseModel):
    """Consecutive ensemble differences E ||u^{kappa_i} - u^{kappa_{i+1}}||_{L^1_{t,x}}."""
    kappas: List[float] = PydanticField(..., description="Viscosity ladder")
    differences: List[float] = PydanticField(..., description="Ensemble mean of consecutive differences")
    stderr: List[float] = PydanticField(..., description="Standard error of each difference")
    members: int = PydanticField(..., description="Ensemble size")
    passed: bool = PydanticField(..., description="differences[i+1] <= 1.1 * differences[i] for all i")

    @classmethod
    def from_member_differences(cls, kappas: Sequence[float], table: np.ndarray) -> "CauchyReport":
        """Aggregate a (members, len(kappas) - 1) table of per-member differences."""
        table = np.atleast_2d(np.asarray(table, dtype=float))
        members = table.shape[0]
        mean = table.mean(axis=0)
        spread = table.std(axis=0, ddof=1) / np.sqrt(members) if members > 1 else np.zeros_like(mean)
        passed = bool(np.all(mean[1:] <= LADDER_SLACK * mean[:-1]))
        return cls(
            kappas=[float(k) for k in kappas],
            differences=mean.tolist(),
            stderr=spread.tolist(),
            members=members,
            passed=passed,
        )


def space_time_l1(a: Trajectory, b: Trajectory) -> float:
    """sum_t dt_rec sum_x |a - b| h^N over the recorded times after t = 0."""
    steps = np.diff(a.times)
    diff = np.abs(a.values() - b.values())
    per_time = diff.reshape(diff.shape[0], -1).sum(axis=1) * a.config.grid.cell_volume
    return float(np.sum(per_time[1:] * steps))


def ladder_differences(config: SolverConfig, u0: Field, seed: int, kappas: Sequence[float]) -> np.ndarray:
    """Consecutive space-time L^1 differences along the ladder for one seed."""
    kappas = [float(k) for k in kappas]
    if len(kappas) < 2 or any(b >= a for a, b in zip(kappas, kappas[1:])):
        raise ValueError(f"kappa list must be strictly decreasing with at least two entries: {kappas}")
    runs = [solve(config.with_model(viscosity=k), u0, seed) for k in kappas]
    return np.asarray([space_time_l1(a, b) for a, b in zip(runs, runs[1:])])


def vanishing_viscosity_ladder(
    config: SolverConfig,
    u0: Field,
    seed: int,
    kappas: Sequence[float],
    members: int = 1,
) -> CauchyReport:
    """Run the ladder for ``members`` coupled seeds derived from ``seed`` and aggregate."""
    table = np.stack([ladder_differences(config, u0, member_seed(seed, i), kappas) for i in range(members)])
    report = CauchyReport.from_member_differences(kappas, table)
    logger.info(f"Viscosity ladder differences {report.differences} (passed={report.passed})")
    return report
