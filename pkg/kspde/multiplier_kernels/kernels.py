"""
Space-time transform helpers, the dyadic split of a (t, x, xi) array by
symbol magnitude, and discrete kernel L^1 norms.
"""

import logging
from typing import Dict, Optional, Tuple

import numpy as np

from kspde.field import TorusGrid
from kspde.model import ModelSpec
from kspde.models import SymbolComponent
from kspde.multiplier_kernels.partition import SymbolPartition

logger = logging.getLogger(__name__)


def kernel_l1_norm(multiplier: np.ndarray) -> float:
    """
    sum |F^-1 m| for a multiplier given on the centred lattice; the l^1 norm of the
    convolution kernel bounds the operator norm of m on l^1 of the discrete torus.
    """
    kernel = np.fft.ifftn(np.fft.ifftshift(np.asarray(multiplier, dtype=complex)))
    return float(np.sum(np.abs(kernel)))


def spacetime_frequencies(time_count: int, time_step: float, grid: TorusGrid) -> Tuple[np.ndarray, ...]:
    """Angular time frequencies and integer space frequencies in FFT (unshifted) order."""
    u = 2.0 * np.pi * np.fft.fftfreq(time_count, d=time_step)
    n = np.fft.fftfreq(grid.points_per_dim, d=1.0 / grid.points_per_dim)
    return (u,) + (n,) * grid.dim


def symbol_magnitude(
    spec: ModelSpec,
    time_count: int,
    time_step: float,
    grid: TorusGrid,
    xi: np.ndarray,
    component: SymbolComponent = SymbolComponent.FULL,
) -> np.ndarray:
    """|L(iu, in, xi)| on the (u, n..., xi) transform grid."""
    freqs = spacetime_frequencies(time_count, time_step, grid)
    mesh = np.meshgrid(*freqs, indexing="ij")
    u, ns = mesh[0], mesh[1:]
    direction = spec.direction(grid.dim)
    projection = sum(d * n for d, n in zip(direction, ns))
    norm_sq = sum(n ** 2 for n in ns)
    transport = u[..., None] + projection[..., None] * spec.b(xi)
    dissipation = norm_sq[..., None] * spec.diffusion(xi)
    if component == SymbolComponent.HYPERBOLIC:
        return np.abs(transport)
    if component == SymbolComponent.PARABOLIC:
        return np.abs(dissipation)
    return np.hypot(transport, dissipation)


def spacetime_forward(g: np.ndarray, window: Optional[np.ndarray] = None) -> np.ndarray:
    """Orthonormal FFT over every axis but the last (the xi axis)."""
    data = np.asarray(g, dtype=float)
    if window is not None:
        data = data * window.reshape((-1,) + (1,) * (data.ndim - 1))
    return np.fft.fftn(data, axes=tuple(range(data.ndim - 1)), norm="ortho")


def spacetime_inverse(g_hat: np.ndarray) -> np.ndarray:
    return np.fft.ifftn(g_hat, axes=tuple(range(g_hat.ndim - 1)), norm="ortho")


def dyadic_symbol_split(
    g: np.ndarray,
    spec: ModelSpec,
    delta: float,
    time_step: float,
    grid: TorusGrid,
    xi: np.ndarray,
    component: SymbolComponent = SymbolComponent.FULL,
) -> Dict[int, np.ndarray]:
    """
    Split g(t, x..., xi) into components whose transforms live where
    |L| <= delta (K = 0) or delta K / 2 <= |L| <= 2 delta K (K = 1, 2, 4, ...).
    The components sum back to g.
    """
    magnitude = symbol_magnitude(spec, g.shape[0], time_step, grid, xi, component)
    partition = SymbolPartition.build(magnitude, delta)
    g_hat = spacetime_forward(g)
    components = {level: spacetime_inverse(weight * g_hat).real for level, weight in partition.weights.items()}
    logger.debug(f"Split into {len(components)} symbol levels at delta={delta}")
    return components
