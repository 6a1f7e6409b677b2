"""
The kinetic symbol L(iu, in, xi) = i(u + b(xi).n) + n^T A(xi) n and the
brute-force measure of its sublevel sets over a dyadic frequency shell.
"""

import logging
import math
from typing import List, Optional, Sequence, Tuple

import numpy as np
import pandas as pd

from kspde.errors import EmptyFrequencyShell
from kspde.model.localization import Localization
from kspde.model.spec import ModelSpec
from kspde.models import SymbolComponent

logger = logging.getLogger(__name__)

U_SAMPLES = 65
CROSSING_SAMPLES = 9
XI_SPACING = 1e-4


def symbol_eval(
    spec: ModelSpec,
    u: float,
    n,
    xi,
    component: SymbolComponent = SymbolComponent.FULL,
) -> np.ndarray:
    """L(iu, in, xi); n is an integer or an integer vector, xi may be an array."""
    n_vec = np.atleast_1d(np.asarray(n, dtype=float))
    dim = n_vec.size
    xi = np.asarray(xi, dtype=float)
    transport = u + spec.b(xi) * float(spec.direction(dim) @ n_vec)
    dissipation = spec.diffusion(xi) * float(n_vec @ n_vec)
    if component == SymbolComponent.HYPERBOLIC:
        return 1j * transport
    if component == SymbolComponent.PARABOLIC:
        return dissipation + 0j
    return dissipation + 1j * transport


def frequency_shell(J: int, dim: int, direction: Optional[np.ndarray] = None) -> List[np.ndarray]:
    """
    Lattice points with J/2 <= |n| <= 2J.

    In N = 2 points giving the same symbol (same projection on the flux
    direction and same |n|^2) are kept once.
    """
    reach = 2 * J
    if dim == 1:
        # u -> -u maps n to -n, and the u samples are symmetric, so n > 0 suffices
        shell = [np.array([k], dtype=float) for k in range(1, reach + 1) if J / 2 <= k]
    else:
        direction = np.ones(2) if direction is None else direction
        seen = set()
        shell = []
        for k1 in range(-reach, reach + 1):
            for k2 in range(-reach, reach + 1):
                norm = math.hypot(k1, k2)
                if not J / 2 <= norm <= reach:
                    continue
                key = (round(float(direction @ np.array([k1, k2])), 12), k1 * k1 + k2 * k2)
                if key in seen:
                    continue
                seen.add(key)
                shell.append(np.array([k1, k2], dtype=float))
    if not shell:
        raise EmptyFrequencyShell(f"No lattice point with {J / 2} <= |n| <= {reach}")
    return shell


def default_xi_grid(localization: Localization, spacing: float = XI_SPACING) -> Tuple[np.ndarray, float]:
    """Cell centres covering the support of eta, and the cell width."""
    lo, hi = localization.support()
    cells = max(1, int(math.ceil((hi - lo) / spacing)))
    width = (hi - lo) / cells
    return lo + (np.arange(cells) + 0.5) * width, width


def default_u_samples(spec: ModelSpec, J: int, xi: np.ndarray, n: np.ndarray) -> np.ndarray:
    """65 points on [-U, U], U = 2 J max|b|, plus the crossings u = -b(xi*).n."""
    speed = float(np.max(np.abs(spec.b(xi)))) if xi.size else 0.0
    bound = 2.0 * J * speed
    grid = np.linspace(-bound, bound, U_SAMPLES)
    anchors = xi[np.linspace(0, xi.size - 1, CROSSING_SAMPLES).astype(int)]
    projection = float(spec.direction(n.size) @ n)
    crossings = -spec.b(anchors) * projection
    return np.unique(np.concatenate([grid, crossings, [0.0]]))


def omega_measure(
    spec: ModelSpec,
    localization: Localization,
    J: int,
    delta: float,
    u_grid: Optional[Sequence[float]] = None,
    xi_grid: Optional[Sequence[float]] = None,
    dim: int = 1,
    component: SymbolComponent = SymbolComponent.FULL,
) -> float:
    """
    sup over sampled u and shell frequencies n of |{xi in supp eta : |L(iu, in, xi)| <= delta}|.

    The measure is the number of xi cells in the set times the cell width.
    """
    if xi_grid is None:
        xi, width = default_xi_grid(localization)
    else:
        xi = np.asarray(xi_grid, dtype=float)
        width = float(xi[1] - xi[0]) if xi.size > 1 else 0.0
        xi = xi[localization.eta_values(xi) > 0]

    direction = spec.direction(dim)
    b_xi = spec.b(xi)
    a_xi = spec.diffusion(xi)
    best = 0.0
    for n in frequency_shell(J, dim, direction):
        u = np.asarray(u_grid, dtype=float) if u_grid is not None else default_u_samples(spec, J, xi, n)
        transport = u[:, None] + b_xi[None, :] * float(direction @ n)
        dissipation = np.broadcast_to(a_xi * float(n @ n), transport.shape)
        if component == SymbolComponent.HYPERBOLIC:
            magnitude = np.abs(transport)
        elif component == SymbolComponent.PARABOLIC:
            magnitude = dissipation
        else:
            magnitude = np.hypot(transport, dissipation)
        count = int(np.max(np.sum(magnitude <= delta, axis=1)))
        best = max(best, count * width)
    return best


def omega_table(
    spec: ModelSpec,
    localization: Localization,
    J_list: Sequence[int],
    delta_list: Sequence[float],
    dim: int = 1,
    component: SymbolComponent = SymbolComponent.FULL,
) -> pd.DataFrame:
    """Measured omega for every (J, delta) cell; columns J, delta, omega."""
    rows = []
    for J in J_list:
        for delta in delta_list:
            omega = omega_measure(spec, localization, int(J), float(delta), dim=dim, component=component)
            logger.debug(f"omega(J={J}, delta={delta}) = {omega:.6g}")
            rows.append({"J": int(J), "delta": float(delta), "omega": omega})
    return pd.DataFrame(rows, columns=["J", "delta", "omega"])


def symbol_derivative_ratio(
    spec: ModelSpec,
    localization: Localization,
    J: int,
    beta: float,
    dim: int = 1,
    samples: int = 401,
) -> float:
    """
    sup |d/dxi L(iu, in, xi)| / (theta(xi) J^beta) over the shell and sampled xi in supp eta.

    u drops out of the derivative. Pathological custom callables may need a
    denser sample than the default.
    """
    lo, hi = localization.support()
    xi = np.linspace(lo, hi, samples)
    direction = spec.direction(dim)
    weight = localization.theta(xi) * float(J) ** beta
    worst = 0.0
    for n in frequency_shell(J, dim, direction):
        derivative = np.hypot(spec.b_prime(xi) * float(direction @ n), spec.diffusion_prime(xi) * float(n @ n))
        worst = max(worst, float(np.max(derivative / weight)))
    return worst
