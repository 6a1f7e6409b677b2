"""
Noise model and the Euler-Maruyama noise term.
"""

import logging
import math
from typing import List, Optional, Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, model_validator

from kspde.config.manager import NoiseConfig
from kspde.errors import BoundViolation, GridMismatch
from kspde.field import Field as GridField
from kspde.field import TorusGrid
from kspde.models import NoiseFamily
from kspde.noise.factory import NoiseFactory

logger = logging.getLogger(__name__)

BOUND_TOLERANCE = 1e-6
_FD_STEP = 1e-6


class NoiseModel(BaseModel):
    """K modes g_k(x, xi) = alpha_k c_k(x) s_k(xi) of the chosen family."""

    model_config = ConfigDict(frozen=True)

    mode_count: int = Field(0, ge=0, description="K (0 = deterministic)")
    alpha: List[float] = Field(default_factory=list, description="alpha_k > 0")
    family: NoiseFamily = Field(NoiseFamily.MULTIPLICATIVE_DEFAULT, description="Coefficient family")

    @model_validator(mode="after")
    def check_alpha(self) -> "NoiseModel":
        if len(self.alpha) != self.mode_count:
            raise ValueError(f"alpha has {len(self.alpha)} entries but K={self.mode_count}")
        if any(a <= 0 for a in self.alpha):
            raise ValueError("alpha_k must be positive")
        return self

    @classmethod
    def from_config(cls, config: NoiseConfig) -> "NoiseModel":
        return cls(mode_count=config.K, alpha=list(config.alpha), family=config.family)

    @classmethod
    def deterministic(cls) -> "NoiseModel":
        return cls()

    @property
    def amplitude(self) -> float:
        """D = sum alpha_k^2."""
        return float(sum(a * a for a in self.alpha))

    def coefficients(self, theta: np.ndarray, xi: np.ndarray, dim: int) -> np.ndarray:
        """g_k(theta, xi) stacked along a leading mode axis."""
        family = NoiseFactory.create_family(self.family)
        theta, xi = np.broadcast_arrays(np.asarray(theta, dtype=float), np.asarray(xi, dtype=float))
        out = np.empty((self.mode_count,) + theta.shape)
        for index, a in enumerate(self.alpha):
            k = index + 1
            out[index] = a * family.spatial(k, theta, dim) * family.profile(k, xi)
        return out

    def coefficients_on(self, u: GridField) -> np.ndarray:
        """g_k(x, u(x)) for every mode, shape (K,) + grid shape."""
        theta = sum(u.coordinates())
        return self.coefficients(theta, u.values, u.grid.dim)


def apply_noise(u: GridField, model: NoiseModel, increments: np.ndarray) -> GridField:
    """sum_k g_k(x, u(x)) Delta B_k."""
    increments = np.asarray(increments, dtype=float)
    if increments.shape != (model.mode_count,):
        raise GridMismatch(f"Expected {model.mode_count} increments, got shape {increments.shape}")
    if model.mode_count == 0:
        return GridField.zeros(u.grid)
    g = model.coefficients_on(u)
    return GridField(u.grid, np.tensordot(increments, g, axes=1))


class ModeBounds(BaseModel):
    """Sampled maxima for one mode."""
    k: int = Field(..., description="Mode index (1-based)")
    alpha: float = Field(..., description="alpha_k")
    max_value_at_zero: float = Field(..., description="max |g_k(x, 0)|")
    max_grad_x: float = Field(..., description="max |grad_x g_k|")
    max_d_xi: float = Field(..., description="max |d_xi g_k|")
    combined_ratio: float = Field(..., description="max (|g_k(x,0)| + |grad_x g_k| + |d_xi g_k|) / alpha_k")
    growth_ratio: float = Field(..., description="max |g_k| / (alpha_k (1 + |xi|))")


class BoundReport(BaseModel):
    """Outcome of verify_bounds."""
    modes: List[ModeBounds] = Field(default_factory=list, description="Per-mode maxima")
    total_ratio: float = Field(0.0, description="max G^2 / (2 D (1 + xi^2))")
    passed: bool = Field(True, description="All ratios <= 1 + tolerance")
    offenders: List[Tuple[int, float, float]] = Field(
        default_factory=list, description="(k, x, xi) where a bound fails; x is theta = sum x_i in N=2, k=0 marks G^2"
    )


def verify_bounds(
    model: NoiseModel,
    grid: TorusGrid,
    xi_range: Tuple[float, float] = (-4.0, 4.0),
    xi_samples: int = 201,
    strict: bool = False,
) -> BoundReport:
    """
    Check |g_k(x,0)| + |grad_x g_k| + |d_xi g_k| <= alpha_k, |g_k| <= alpha_k (1 + |xi|)
    and G^2 <= 2 D (1 + xi^2) on sampled (x, xi) with finite differences.
    """
    dim = grid.dim
    theta = sum(grid.coordinates()).ravel()
    xi = np.linspace(xi_range[0], xi_range[1], xi_samples)
    T, X = np.meshgrid(theta, xi, indexing="ij")
    limit = 1.0 + BOUND_TOLERANCE

    report = BoundReport()
    if model.mode_count == 0:
        return report

    g = model.coefficients(T, X, dim)
    g_zero = model.coefficients(T, np.zeros_like(X), dim)
    d_theta = (model.coefficients(T + _FD_STEP, X, dim) - model.coefficients(T - _FD_STEP, X, dim)) / (2 * _FD_STEP)
    grad_x = math.sqrt(dim) * np.abs(d_theta)
    d_xi = np.abs(model.coefficients(T, X + _FD_STEP, dim) - model.coefficients(T, X - _FD_STEP, dim)) / (2 * _FD_STEP)

    for index, a in enumerate(model.alpha):
        k = index + 1
        combined = (np.abs(g_zero[index]) + grad_x[index] + d_xi[index]) / a
        growth = np.abs(g[index]) / (a * (1.0 + np.abs(X)))
        mode = ModeBounds(
            k=k,
            alpha=a,
            max_value_at_zero=float(np.max(np.abs(g_zero[index]))),
            max_grad_x=float(np.max(grad_x[index])),
            max_d_xi=float(np.max(d_xi[index])),
            combined_ratio=float(np.max(combined)),
            growth_ratio=float(np.max(growth)),
        )
        report.modes.append(mode)
        for ratio in (combined, growth):
            if ratio.max() > limit:
                i, j = np.unravel_index(int(np.argmax(ratio)), ratio.shape)
                report.offenders.append((k, float(T[i, j]), float(X[i, j])))

    total = np.sum(g ** 2, axis=0) / (2.0 * model.amplitude * (1.0 + X ** 2))
    report.total_ratio = float(np.max(total))
    if report.total_ratio > limit:
        i, j = np.unravel_index(int(np.argmax(total)), total.shape)
        report.offenders.append((0, float(T[i, j]), float(X[i, j])))

    report.passed = not report.offenders
    if not report.passed:
        logger.warning(f"Noise family {model.family.value} violates its bounds at {len(report.offenders)} places")
        if strict:
            raise BoundViolation("Noise coefficients violate their growth bounds", report.offenders)
    return report
