"""
Velocity-averaged Fourier multipliers psi(|L|/delta) on (t, x, xi) grids and
the discrete truncation-property probe.
"""

import logging
from typing import Callable, Optional, Sequence, Tuple

import numpy as np
import pandas as pd
from pydantic import BaseModel, ConfigDict, Field as PydanticField

from kspde.field import TorusGrid
from kspde.model import ModelSpec
from kspde.models import SymbolComponent
from kspde.multiplier_kernels import kernel_l1_norm, spacetime_forward, spacetime_inverse, symbol_magnitude

logger = logging.getLogger(__name__)

UNIFORMITY_FACTOR = 10.0

Profile = Callable[[np.ndarray], np.ndarray]


def xi_cell_width(xi: np.ndarray) -> float:
    xi = np.asarray(xi, dtype=float)
    if xi.size < 2:
        return 1.0
    return float(xi[1] - xi[0])


def hann_window(time_count: int) -> np.ndarray:
    return np.hanning(time_count)


def resolve_window(time_count: int, window: Optional[np.ndarray], windowed: bool) -> Optional[np.ndarray]:
    """An explicit window wins; otherwise Hann over the time axis when windowed and it has more than one sample."""
    if window is not None:
        return np.asarray(window, dtype=float)
    if windowed and time_count > 1:
        return hann_window(time_count)
    return None


def averaged_multiplier_apply(
    f: np.ndarray,
    psi: Profile,
    spec: ModelSpec,
    delta: float,
    time_step: float,
    grid: TorusGrid,
    xi: np.ndarray,
    component: SymbolComponent = SymbolComponent.FULL,
    window: Optional[np.ndarray] = None,
    windowed: bool = True,
) -> np.ndarray:
    """
    sum_xi dxi F^-1[psi(|L(u, n, xi)| / delta) F (w f)](t, x, xi).

    f has shape (time, x..., xi); transforms are orthonormal over (t, x).
    The time record is not periodic, so w defaults to a Hann taper; pass
    windowed=False for the raw periodic transform.
    """
    f = np.asarray(f, dtype=float)
    window = resolve_window(f.shape[0], window, windowed)
    magnitude = symbol_magnitude(spec, f.shape[0], time_step, grid, xi, component)
    filtered = spacetime_inverse(psi(magnitude / delta) * spacetime_forward(f, window))
    return xi_cell_width(xi) * filtered.real.sum(axis=-1)


def sup_sublevel_measure(
    psi: Profile,
    spec: ModelSpec,
    delta: float,
    time_count: int,
    time_step: float,
    grid: TorusGrid,
    xi: np.ndarray,
    component: SymbolComponent = SymbolComponent.FULL,
) -> float:
    """max over (u, n) of the xi-measure where psi(|L|/delta) is nonzero."""
    magnitude = symbol_magnitude(spec, time_count, time_step, grid, xi, component)
    active = np.count_nonzero(psi(magnitude / delta), axis=-1)
    return float(active.max() * xi_cell_width(xi))


def multiplier_l2_sides(
    f: np.ndarray,
    psi: Profile,
    spec: ModelSpec,
    delta: float,
    time_step: float,
    grid: TorusGrid,
    xi: np.ndarray,
    component: SymbolComponent = SymbolComponent.FULL,
    window: Optional[np.ndarray] = None,
    windowed: bool = True,
) -> Tuple[float, float]:
    """
    (||M (w f)||_2, sup|Omega|^(1/2) ||w f||_2) in the discrete (t, x, xi) norms,
    with the same time taper w on both sides; requires 0 <= psi <= 1.
    """
    f = np.asarray(f, dtype=float)
    window = resolve_window(f.shape[0], window, windowed)
    output = averaged_multiplier_apply(f, psi, spec, delta, time_step, grid, xi, component, window, windowed)
    tapered = f if window is None else f * window.reshape((-1,) + (1,) * (f.ndim - 1))
    measure = sup_sublevel_measure(psi, spec, delta, f.shape[0], time_step, grid, xi, component)
    lhs = float(np.sqrt(np.sum(output ** 2)))
    rhs = float(np.sqrt(measure * xi_cell_width(xi) * np.sum(tapered ** 2)))
    return lhs, rhs


def lattice_symbol_magnitude(
    spec: ModelSpec, grid: TorusGrid, xi: float, component: SymbolComponent = SymbolComponent.FULL
) -> np.ndarray:
    """|L(0, n, xi)| on the centred lattice."""
    ns = [n.astype(float) for n in grid.frequencies()]
    direction = spec.direction(grid.dim)
    transport = float(spec.b(xi)) * sum(d * n for d, n in zip(direction, ns))
    dissipation = float(spec.diffusion(xi)) * sum(n ** 2 for n in ns)
    if component == SymbolComponent.HYPERBOLIC:
        return np.abs(transport)
    if component == SymbolComponent.PARABOLIC:
        return np.abs(dissipation)
    return np.hypot(transport, dissipation)


class TruncationProbeReport(BaseModel):
    model_config = ConfigDict(arbitrary_types_allowed=True)

    table: pd.DataFrame = PydanticField(..., description="Columns delta, xi, kernel_norm")
    ratio: float = PydanticField(..., description="max / min kernel norm over the table")
    passed: bool = PydanticField(..., description="ratio < UNIFORMITY_FACTOR")


def truncation_property_probe(
    spec: ModelSpec,
    psi: Profile,
    deltas: Sequence[float],
    xis: Sequence[float],
    grid: TorusGrid,
    component: SymbolComponent = SymbolComponent.FULL,
) -> TruncationProbeReport:
    """l^1 norm of the kernel of psi(|L(0, n, xi)|/delta) for every (delta, xi) pair."""
    rows = []
    for delta in deltas:
        for xi in xis:
            magnitude = lattice_symbol_magnitude(spec, grid, xi, component)
            rows.append({"delta": delta, "xi": xi, "kernel_norm": kernel_l1_norm(psi(magnitude / delta))})
    table = pd.DataFrame(rows, columns=["delta", "xi", "kernel_norm"])
    norms = table["kernel_norm"].to_numpy()
    ratio = float(norms.max() / norms.min()) if norms.min() > 0 else float("inf")
    passed = ratio < UNIFORMITY_FACTOR
    logger.info(f"Truncation probe over {len(table)} entries: max/min = {ratio:.4g}")
    return TruncationProbeReport(table=table, ratio=ratio, passed=passed)
