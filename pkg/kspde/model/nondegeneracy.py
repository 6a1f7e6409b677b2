"""
Non-degeneracy exponents (alpha, beta) of the kinetic symbol and the
regularity they predict for velocity averages.
"""

import logging
import math
from typing import Optional, Sequence, Tuple

import numpy as np
import pandas as pd
from pydantic import BaseModel, Field

from kspde.errors import DegenerateFit, InvalidModel
from kspde.model.localization import Localization
from kspde.model.spec import ModelSpec
from kspde.model.symbol import omega_table
from kspde.models import SymbolComponent

logger = logging.getLogger(__name__)

PREDICTION_FACTOR = 0.95


class NondegeneracyFit(BaseModel):
    """Fitted omega(J; delta) ~ (delta / J^beta)^alpha and the resulting regularity prediction."""
    alpha: float = Field(..., description="Fitted alpha")
    beta: float = Field(..., description="Fitted beta")
    fit_residual: float = Field(..., description="Max absolute residual of the log-log regression")
    s_bound: float = Field(..., description="alpha^2 beta / (6 (1 + 2 alpha))")
    r_bound: float = Field(..., description="r solving 1/r = (1 - theta)/2 + theta")
    predicted_s: float = Field(..., description="0.95 * s_bound")
    predicted_r: float = Field(..., description="0.95 * r_bound")


def closed_form_exponents(k: Optional[int], m: Optional[float]) -> Tuple[float, float]:
    """(1/(m-1), 2) with diffusion, (1/(k-1), 1) without."""
    if k is None or k < 2:
        raise InvalidModel(f"flux exponent k must be >= 2, got {k}")
    if m is not None:
        if m <= 2:
            raise InvalidModel(f"diffusion exponent m must be > 2, got {m}")
        return 1.0 / (m - 1.0), 2.0
    return 1.0 / (k - 1.0), 1.0


def predicted_regularity(alpha: float, beta: float) -> Tuple[float, float, float]:
    """(s_bound, theta, r_bound) for exponents (alpha, beta)."""
    s_bound = alpha ** 2 * beta / (6.0 * (1.0 + 2.0 * alpha))
    theta = alpha / (4.0 + alpha)
    r_bound = 1.0 / ((1.0 - theta) / 2.0 + theta)
    return s_bound, theta, r_bound


def fit_power_law(table: pd.DataFrame) -> NondegeneracyFit:
    """
    Least squares of log omega = alpha log delta - alpha beta log J + c.

    Rows with omega <= 0 carry no information and are dropped.
    """
    data = table[table["omega"] > 0]
    dropped = len(table) - len(data)
    if dropped:
        logger.warning(f"Dropped {dropped} empty sublevel measurements from the fit")

    design = np.column_stack([
        np.log(data["delta"].to_numpy(dtype=float)),
        np.log(data["J"].to_numpy(dtype=float)),
        np.ones(len(data)),
    ])
    if design.shape[0] < 3 or np.linalg.matrix_rank(design) < 3:
        raise DegenerateFit(f"Design matrix of rank {np.linalg.matrix_rank(design) if design.size else 0} < 3")

    target = np.log(data["omega"].to_numpy(dtype=float))
    coefficients, *_ = np.linalg.lstsq(design, target, rcond=None)
    alpha, slope_J, _ = coefficients
    if alpha <= 0:
        raise DegenerateFit(f"Fitted alpha {alpha:.4g} is not positive")
    beta = -slope_J / alpha
    residual = float(np.max(np.abs(design @ coefficients - target)))

    s_bound, _, r_bound = predicted_regularity(alpha, beta)
    return NondegeneracyFit(
        alpha=float(alpha),
        beta=float(beta),
        fit_residual=residual,
        s_bound=s_bound,
        r_bound=r_bound,
        predicted_s=PREDICTION_FACTOR * s_bound,
        predicted_r=PREDICTION_FACTOR * r_bound,
    )


def fit_exponents(
    spec: ModelSpec,
    localization: Localization,
    J_list: Sequence[int],
    delta_list: Sequence[float],
    dim: int = 1,
    component: SymbolComponent = SymbolComponent.FULL,
) -> Tuple[NondegeneracyFit, pd.DataFrame]:
    """Measure omega on the (J, delta) grid and fit the exponents; returns the fit and the table."""
    if len(set(J_list)) < 3 or len(set(delta_list)) < 3:
        raise DegenerateFit("At least three distinct J and delta values are required")
    table = omega_table(spec, localization, J_list, delta_list, dim=dim, component=component)
    fit = fit_power_law(table)
    logger.info(
        f"Fitted alpha={fit.alpha:.4f}, beta={fit.beta:.4f} "
        f"(residual {fit.fit_residual:.3g}, s_bound {fit.s_bound:.4g})"
    )
    return fit, table


def required_integrability(spec: ModelSpec) -> float:
    """Moment order 2p + 3 of the initial datum that the weight theta(xi) = 1 + |xi|^p asks for."""
    return 2.0 * spec.weight_order() + 3.0


def hoelder_constant(spec: ModelSpec, radius: float, samples: int = 2001) -> float:
    """C(R) = max |sigma'| on [-R, R], the Lipschitz constant of sigma there."""
    xi = np.linspace(-radius, radius, samples)
    step = 1e-6
    slope = np.abs(spec.sigma(xi + step) - spec.sigma(xi - step)) / (2.0 * step)
    return float(np.max(slope))
