"""
Initial data: the canned shapes, the kappa-mollification u0 -> u0^kappa and
the method-of-characteristics reference for Burgers' equation.
"""

import logging
import math
from typing import Callable, List

import numpy as np

from kspde.config.manager import InitialDataConfig
from kspde.field import Field, TorusGrid, forward_transform, inverse_transform
from kspde.field.transforms import SpectralField
from kspde.models import InitialDataKind

logger = logging.getLogger(__name__)


class InitialDataFactory:
    """Factory class for creating initial data fields."""

    @staticmethod
    def create_initial_data(grid: TorusGrid, config: InitialDataConfig) -> Field:
        """
        Create and return the initial datum described by ``config``.

        Args:
            grid: Target grid
            config: Initial data block

        Returns:
            Field on ``grid``
        """
        coords = grid.coordinates()
        theta = sum(coords)
        kind = InitialDataKind(config.kind)

        if kind == InitialDataKind.CONSTANT:
            values = np.full(grid.shape, config.amplitude)
        elif kind == InitialDataKind.COSINE:
            values = config.amplitude * np.cos(config.frequency * theta)
        elif kind == InitialDataKind.SINE:
            values = config.amplitude * np.sin(config.frequency * theta)
        elif kind == InitialDataKind.RIEMANN:
            values = np.where(coords[0] < config.position, config.left, config.right)
        elif kind == InitialDataKind.BUMP:
            distance_sq = sum((c - config.position) ** 2 for c in coords)
            values = config.amplitude * np.maximum(0.0, 1.0 - distance_sq / config.width ** 2)
        elif kind == InitialDataKind.WHITE_NOISE:
            generator = np.random.Generator(np.random.Philox(key=config.seed))
            values = np.clip(config.amplitude * generator.standard_normal(grid.shape), -config.clip, config.clip)
        else:
            raise ValueError(f"Unsupported initial data kind: {kind}")

        return Field(grid, values + config.offset)

    @staticmethod
    def get_supported_kinds() -> List[str]:
        """Get list of supported initial data shapes."""
        return [kind.value for kind in InitialDataKind]


def fejer_weights(grid: TorusGrid, cutoff: int) -> np.ndarray:
    """Tensor-product Fejer weights (1 - |n_i|/(M+1))_+ on the centred lattice."""
    weights = np.ones(grid.shape)
    for n in grid.frequencies():
        weights = weights * np.maximum(0.0, 1.0 - np.abs(n) / (cutoff + 1.0))
    return weights


def smooth_initial_datum(u0: Field, kappa: float) -> Field:
    """
    u0^kappa: Fejer low-pass at cutoff M = ceil(1/kappa), then clamp at +-1/kappa.

    The Fejer kernel is a positive summability kernel, so the low-pass does not
    create new extrema.
    """
    if kappa <= 0:
        raise ValueError(f"kappa must be positive, got {kappa}")
    cutoff = math.ceil(1.0 / kappa)
    spectrum = forward_transform(u0)
    filtered = SpectralField(u0.grid, spectrum.coefficients * fejer_weights(u0.grid, cutoff))
    smooth = inverse_transform(filtered)
    bound = 1.0 / kappa
    return Field(u0.grid, np.clip(smooth.values, -bound, bound))


def burgers_characteristics(
    u0: Callable[[np.ndarray], np.ndarray],
    x: np.ndarray,
    t: float,
    tol: float = 1e-13,
    max_iter: int = 100,
) -> np.ndarray:
    """
    Solution of u_t + (u^2/2)_x = 0 before the first shock: u(t, x) = u0(y)
    with y + t u0(y) = x, solved by Newton's method from y = x - t u0(x).
    """
    x = np.asarray(x, dtype=float)
    y = x - t * u0(x)
    step = 1e-7
    for _ in range(max_iter):
        g = y + t * u0(y) - x
        slope = 1.0 + t * (u0(y + step) - u0(y - step)) / (2.0 * step)
        if np.any(slope <= 0):
            raise ValueError(f"Characteristics cross before t={t}; the solution has a shock")
        update = g / slope
        y = y - update
        if np.max(np.abs(update)) < tol:
            return u0(y)
    raise ValueError(f"Characteristics solve did not converge in {max_iter} iterations")
