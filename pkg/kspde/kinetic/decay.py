"""
Large-xi decay of kinetic measures: the scaled dyadic shell profile
2^-l E m([0,T] x T^N x {2^l <= |xi| <= 2^(l+1)}), local boundedness on
[-k, k] bands, and domination of the tail by the initial-data tails.
"""

import logging
from typing import List, Sequence

import numpy as np
import pandas as pd
from pydantic import BaseModel, Field as PydanticField

from kspde.errors import RangeNotCovered
from kspde.field import Field
from kspde.kinetic.histogram import KineticMeasureHistogram

logger = logging.getLogger(__name__)

TOP_LEVELS = 3
FINAL_LEVEL_FRACTION = 0.01
GROWTH_SLACK = 0.1
TAIL_SLACK = 0.1


class DecayReport(BaseModel):
    levels: List[int] = PydanticField(..., description="Dyadic levels l")
    scaled_mass: List[float] = PydanticField(..., description="2^-l times the ensemble-mean shell mass")
    total_mass: float = PydanticField(..., description="Ensemble-mean total mass")
    passed: bool = PydanticField(..., description="Top levels nonincreasing and last level < 1% of level 0")

    def to_frame(self) -> pd.DataFrame:
        return pd.DataFrame({"ell": self.levels, "scaled_mass": self.scaled_mass})


class BandReport(BaseModel):
    ks: List[float] = PydanticField(..., description="Band half widths k")
    masses: List[float] = PydanticField(..., description="Ensemble-mean m([0,T] x T^N x [-k,k])")
    growth_exponent: float = PydanticField(..., description="log-log slope of mass against k")
    passed: bool = PydanticField(..., description="Finite and growing at most linearly")


class TailReport(BaseModel):
    constant: float = PydanticField(..., description="Fitted C")
    bound: List[float] = PydanticField(..., description="C (initial tail + alpha^l) per level")
    passed: bool = PydanticField(..., description="Profile below the bound at every level")


def measure_decay_profile(
    histograms: Sequence[KineticMeasureHistogram], levels: Sequence[int]
) -> DecayReport:
    histograms = list(histograms)
    if not histograms:
        raise ValueError("No histograms given")
    levels = [int(level) for level in levels]
    reach = 2.0 ** (max(levels) + 1)
    for hist in histograms:
        if hist.xi.xi_max < reach or hist.xi.xi_min > -reach:
            raise RangeNotCovered(f"xi grid does not reach +-{reach} for level {max(levels)}")

    scaled = []
    for level in levels:
        shell = np.mean([h.shell_mass(2.0 ** level, 2.0 ** (level + 1)) for h in histograms])
        scaled.append(float(2.0 ** -level * shell))
    total = float(np.mean([h.total() for h in histograms]))

    top = scaled[-TOP_LEVELS:]
    nonincreasing = all(b <= a for a, b in zip(top, top[1:]))
    reference = scaled[0]
    small_tail = scaled[-1] <= FINAL_LEVEL_FRACTION * reference if reference > 0 else scaled[-1] == 0.0
    report = DecayReport(levels=levels, scaled_mass=scaled, total_mass=total, passed=nonincreasing and small_tail)
    logger.debug(f"Decay profile {scaled} (total {total:.4g})")
    return report


def band_mass_growth(histograms: Sequence[KineticMeasureHistogram], ks: Sequence[float]) -> BandReport:
    """E m over [-k, k] bands; growth is judged by the log-log slope against k."""
    ks = [float(k) for k in ks]
    masses = [float(np.mean([h.band_mass(k) for h in histograms])) for k in ks]
    positive = [(k, m) for k, m in zip(ks, masses) if m > 0]
    if len(positive) >= 2:
        slope = float(np.polyfit(np.log([k for k, _ in positive]), np.log([m for _, m in positive]), 1)[0])
    else:
        slope = 0.0
    passed = bool(np.all(np.isfinite(masses)) and slope <= 1.0 + GROWTH_SLACK)
    return BandReport(ks=ks, masses=masses, growth_exponent=slope, passed=passed)


def initial_tail_profile(initial: Sequence[Field], levels: Sequence[int]) -> np.ndarray:
    """E ||(u0 - R)^+||_1 + E ||(u0 + R)^-||_1 at R = 2^l."""
    out = []
    for level in levels:
        radius = 2.0 ** level
        tails = [
            float((np.maximum(u.values - radius, 0.0) + np.maximum(-u.values - radius, 0.0)).sum()
                  * u.grid.cell_volume)
            for u in initial
        ]
        out.append(float(np.mean(tails)))
    return np.asarray(out)


def tail_domination_check(
    profile: Sequence[float], initial_tail: Sequence[float], alpha: float, fit_levels: int = 2
) -> TailReport:
    """
    Fit C on the lowest ``fit_levels`` levels from profile <= C (tail + alpha^l)
    and check the inequality (with 10% slack) on every level.
    """
    if not 0 < alpha < 1:
        raise ValueError(f"alpha must lie in (0, 1), got {alpha}")
    profile = np.asarray(profile, dtype=float)
    reference = np.asarray(initial_tail, dtype=float) + alpha ** np.arange(len(profile))
    constant = float(np.max(profile[:fit_levels] / reference[:fit_levels]))
    bound = constant * reference
    passed = bool(np.all(profile <= (1.0 + TAIL_SLACK) * bound + 1e-15))
    return TailReport(constant=constant, bound=bound.tolist(), passed=passed)
