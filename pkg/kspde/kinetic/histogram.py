"""
Discretized kinetic measures on [0, T] x T^N x R_xi.

Mass is stored in a CSR matrix whose rows enumerate (time bin, x cell) and
whose columns are xi cells.
"""

import logging
from dataclasses import dataclass
from typing import Iterable

import numpy as np
import pandas as pd
import scipy.sparse as sp

from kspde.kinetic.xi_grid import XiGrid
from kspde.models import MeasureComponent

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class KineticMeasureHistogram:
    xi: XiGrid
    time_edges: np.ndarray
    x_cells: int
    mass: sp.csr_matrix
    component: MeasureComponent
    clipped_loss: float = 0.0

    def __post_init__(self) -> None:
        bins = len(self.time_edges) - 1
        expected = (bins * self.x_cells, self.xi.cells)
        if self.mass.shape != expected:
            raise ValueError(f"Histogram matrix has shape {self.mass.shape}, expected {expected}")
        if self.mass.nnz and self.mass.data.min() < 0:
            raise ValueError("Kinetic measure histograms hold nonnegative mass only")

    @classmethod
    def from_deposits(
        cls,
        xi: XiGrid,
        time_edges: np.ndarray,
        x_cells: int,
        rows: np.ndarray,
        cols: np.ndarray,
        values: np.ndarray,
        component: MeasureComponent,
        clipped_loss: float = 0.0,
    ) -> "KineticMeasureHistogram":
        """Sum (row, col, value) deposits; duplicates add up."""
        shape = ((len(time_edges) - 1) * x_cells, xi.cells)
        matrix = sp.coo_matrix((values, (rows, cols)), shape=shape).tocsr()
        matrix.sum_duplicates()
        matrix.eliminate_zeros()
        return cls(xi, np.asarray(time_edges, dtype=float), x_cells, matrix, component, clipped_loss)

    @property
    def time_bins(self) -> int:
        return len(self.time_edges) - 1

    def total(self) -> float:
        return float(self.mass.sum())

    def xi_marginal(self) -> np.ndarray:
        """Mass per xi cell."""
        return np.asarray(self.mass.sum(axis=0)).ravel()

    def time_marginal(self) -> np.ndarray:
        """Mass per time bin."""
        per_row = np.asarray(self.mass.sum(axis=1)).ravel()
        return per_row.reshape(self.time_bins, self.x_cells).sum(axis=1)

    def x_marginal(self) -> np.ndarray:
        """Mass per x cell (flattened grid order)."""
        per_row = np.asarray(self.mass.sum(axis=1)).ravel()
        return per_row.reshape(self.time_bins, self.x_cells).sum(axis=0)

    def band_mass(self, k: float) -> float:
        """m([0, T] x T^N x [-k, k]) at cell-centre resolution."""
        return float(self.xi_marginal()[np.abs(self.xi.centers) <= k].sum())

    def shell_mass(self, lo: float, hi: float) -> float:
        """Mass of cells with lo <= |centre| <= hi."""
        magnitude = np.abs(self.xi.centers)
        return float(self.xi_marginal()[(magnitude >= lo) & (magnitude <= hi)].sum())

    def _check_compatible(self, other: "KineticMeasureHistogram") -> None:
        if (
            self.xi != other.xi
            or self.x_cells != other.x_cells
            or self.component != other.component
            or not np.array_equal(self.time_edges, other.time_edges)
        ):
            raise ValueError("Histograms live on different (t, x, xi) grids or carry different components")

    def merge(self, other: "KineticMeasureHistogram") -> "KineticMeasureHistogram":
        """Sum of two histograms on the same grid."""
        self._check_compatible(other)
        return KineticMeasureHistogram(
            self.xi,
            self.time_edges,
            self.x_cells,
            (self.mass + other.mass).tocsr(),
            self.component,
            self.clipped_loss + other.clipped_loss,
        )

    def scaled(self, factor: float) -> "KineticMeasureHistogram":
        if factor < 0:
            raise ValueError("Histograms can only be scaled by nonnegative factors")
        return KineticMeasureHistogram(
            self.xi, self.time_edges, self.x_cells, (self.mass * factor).tocsr(), self.component,
            self.clipped_loss * factor,
        )

    def to_frame(self) -> pd.DataFrame:
        """Columns t_bin, x_cell, xi_cell, mass, component (nonzero entries only)."""
        coo = self.mass.tocoo()
        return pd.DataFrame({
            "t_bin": coo.row // self.x_cells,
            "x_cell": coo.row % self.x_cells,
            "xi_cell": coo.col,
            "mass": coo.data,
            "component": self.component.value,
        })


def ensemble_mean(histograms: Iterable[KineticMeasureHistogram]) -> KineticMeasureHistogram:
    """Average of member histograms (merge then scale)."""
    histograms = list(histograms)
    if not histograms:
        raise ValueError("No histograms to average")
    total = histograms[0]
    for other in histograms[1:]:
        total = total.merge(other)
    return total.scaled(1.0 / len(histograms))
