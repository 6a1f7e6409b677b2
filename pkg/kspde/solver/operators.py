"""
Array-level finite-volume operators on the periodic grid. All functions take
and return plain numpy arrays shaped like the grid.
"""

import logging
from typing import Dict, Tuple

import numpy as np
import scipy.sparse as sp
from scipy.sparse.linalg import splu

from kspde.errors import LinearSolveFailure
from kspde.model import ModelSpec
from kspde.models import FaceAverage, FluxScheme

logger = logging.getLogger(__name__)

_DEGENERATE_JUMP = 1e-12


def engquist_osher_flux(spec: ModelSpec, left: np.ndarray, right: np.ndarray, direction: float) -> np.ndarray:
    """F(a, b) = f+(a) + f-(b) for the flux f = direction * B^tau."""
    if direction > 0:
        return direction * (spec.flux_plus(left) + spec.flux_minus(right))
    if direction < 0:
        return direction * (spec.flux_minus(left) + spec.flux_plus(right))
    return np.zeros_like(left)


def lax_friedrichs_flux(
    spec: ModelSpec, left: np.ndarray, right: np.ndarray, direction: float, speed: float
) -> np.ndarray:
    """Global (Rusanov) Lax-Friedrichs flux with dissipation speed |direction| * max|b^tau|."""
    central = 0.5 * direction * (spec.flux_tau(left) + spec.flux_tau(right))
    return central - 0.5 * abs(direction) * speed * (right - left)


def convection_update(
    spec: ModelSpec,
    values: np.ndarray,
    ratio: float,
    directions: np.ndarray,
    scheme: FluxScheme,
    speed: float,
) -> np.ndarray:
    """u - (dt/h) sum_i (F_{j+1/2} - F_{j-1/2}) along every axis."""
    out = values.copy()
    for axis, d in enumerate(directions):
        right = np.roll(values, -1, axis=axis)
        if scheme == FluxScheme.ENGQUIST_OSHER:
            face = engquist_osher_flux(spec, values, right, d)
        else:
            face = lax_friedrichs_flux(spec, values, right, d, speed)
        out -= ratio * (face - np.roll(face, 1, axis=axis))
    return out


def face_coefficients(spec: ModelSpec, values: np.ndarray, axis: int, rule: FaceAverage) -> np.ndarray:
    """
    Diffusion coefficient on the face between cell j and j+1 along ``axis``.

    INTEGRAL_MEAN is (Phi(u_{j+1}) - Phi(u_j)) / (u_{j+1} - u_j), the mean of
    A^{kappa,tau} over the interval between the two cell values.
    """
    right = np.roll(values, -1, axis=axis)
    if rule == FaceAverage.ARITHMETIC:
        return 0.5 * (spec.diffusion_reg(values) + spec.diffusion_reg(right))
    jump = right - values
    flat = np.abs(jump) < _DEGENERATE_JUMP
    safe = np.where(flat, 1.0, jump)
    mean = (spec.phi(right) - spec.phi(values)) / safe
    return np.where(flat, spec.diffusion_reg(0.5 * (values + right)), mean)


def explicit_diffusion_update(
    spec: ModelSpec, values: np.ndarray, ratio: float, rule: FaceAverage
) -> np.ndarray:
    """u + (dt/h^2) sum_i div_h(a grad_h u); ratio = dt/h^2."""
    out = values.copy()
    for axis in range(values.ndim):
        if rule == FaceAverage.INTEGRAL_MEAN:
            potential = spec.phi(values)
            flux = np.roll(potential, -1, axis=axis) - potential
        else:
            flux = face_coefficients(spec, values, axis, rule) * (np.roll(values, -1, axis=axis) - values)
        out += ratio * (flux - np.roll(flux, 1, axis=axis))
    return out


def diffusion_matrix(spec: ModelSpec, values: np.ndarray, ratio: float, rule: FaceAverage) -> sp.csc_matrix:
    """I - (dt/h^2) div_h(a grad_h .) with face coefficients frozen at ``values``."""
    shape = values.shape
    size = values.size
    index = np.arange(size).reshape(shape)
    rows, cols, data = [], [], []
    diagonal = np.ones(size)
    for axis in range(values.ndim):
        coefficient = (ratio * face_coefficients(spec, values, axis, rule)).ravel()
        neighbour = np.roll(index, -1, axis=axis).ravel()
        own = index.ravel()
        # face j+1/2 couples j and j+1 symmetrically
        rows.extend([own, neighbour])
        cols.extend([neighbour, own])
        data.extend([-coefficient, -coefficient])
        diagonal += coefficient
        np.add.at(diagonal, neighbour, coefficient)
    rows.append(np.arange(size))
    cols.append(np.arange(size))
    data.append(diagonal)
    matrix = sp.coo_matrix(
        (np.concatenate(data), (np.concatenate(rows), np.concatenate(cols))), shape=(size, size)
    )
    return matrix.tocsc()


def implicit_diffusion_update(
    spec: ModelSpec, values: np.ndarray, ratio: float, rule: FaceAverage
) -> np.ndarray:
    """Solve the linearized backward-Euler diffusion system with a sparse LU factorization."""
    matrix = diffusion_matrix(spec, values, ratio, rule)
    diagnostics: Dict[str, float] = {
        "size": float(values.size),
        "nnz": float(matrix.nnz),
        "min_diagonal": float(matrix.diagonal().min()),
        "max_diagonal": float(matrix.diagonal().max()),
    }
    try:
        solution = splu(matrix).solve(values.ravel())
    except RuntimeError as exc:
        raise LinearSolveFailure(f"Sparse LU failed: {exc}", diagnostics) from exc
    if not np.all(np.isfinite(solution)):
        raise LinearSolveFailure("Semi-implicit diffusion produced non-finite values", diagnostics)
    residual = float(np.max(np.abs(matrix @ solution - values.ravel())))
    diagnostics["residual"] = residual
    logger.debug(f"Semi-implicit diffusion solve: {diagnostics}")
    return solution.reshape(values.shape)


def central_gradient_squared(values: np.ndarray, spacing: float) -> np.ndarray:
    """sum_i |(v_{j+e_i} - v_{j-e_i}) / (2h)|^2 per cell."""
    total = np.zeros_like(values)
    for axis in range(values.ndim):
        total += ((np.roll(values, -1, axis=axis) - np.roll(values, 1, axis=axis)) / (2.0 * spacing)) ** 2
    return total


def value_range(values: np.ndarray) -> Tuple[float, float]:
    return float(values.min()), float(values.max())
