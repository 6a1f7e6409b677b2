"""
Uniform grid in the velocity variable xi.
"""

import math
from dataclasses import dataclass

import numpy as np

from kspde.errors import RangeNotCovered

DEFAULT_CELLS = 256
MARGIN_CELLS = 2


@dataclass(frozen=True)
class XiGrid:
    """``cells`` uniform cells on [xi_min, xi_max]."""

    xi_min: float
    xi_max: float
    cells: int = DEFAULT_CELLS

    def __post_init__(self) -> None:
        if not self.xi_max > self.xi_min:
            raise ValueError(f"Empty xi range [{self.xi_min}, {self.xi_max}]")
        if self.cells < 1:
            raise ValueError("XiGrid needs at least one cell")

    @classmethod
    def covering(cls, lo: float, hi: float, cells: int = DEFAULT_CELLS) -> "XiGrid":
        """Grid over [lo, hi] widened so that MARGIN_CELLS cells lie beyond each end."""
        span = max(hi - lo, 1e-12)
        width = span / (cells - 2 * MARGIN_CELLS)
        return cls(lo - MARGIN_CELLS * width, hi + MARGIN_CELLS * width, cells)

    @classmethod
    def dyadic(cls, level_max: int, cells: int = DEFAULT_CELLS) -> "XiGrid":
        """Symmetric grid on [-2^(l+1), 2^(l+1)] for decay diagnostics up to level l."""
        bound = 2.0 ** (level_max + 1)
        return cls(-bound, bound, cells)

    @classmethod
    def for_envelope(cls, envelope: float, cells: int = DEFAULT_CELLS) -> "XiGrid":
        """Dyadic grid with level_max chosen from four times the observed L^inf envelope."""
        level_max = max(0, math.ceil(math.log2(max(4.0 * envelope, 1.0))) - 1)
        return cls.dyadic(level_max, cells)

    @property
    def width(self) -> float:
        return (self.xi_max - self.xi_min) / self.cells

    @property
    def edges(self) -> np.ndarray:
        return np.linspace(self.xi_min, self.xi_max, self.cells + 1)

    @property
    def centers(self) -> np.ndarray:
        return self.xi_min + (np.arange(self.cells) + 0.5) * self.width

    def ensure_covers(self, lo: float, hi: float) -> None:
        """[lo, hi] must keep MARGIN_CELLS empty cells from both ends of the grid."""
        margin = MARGIN_CELLS * self.width
        slack = 1e-9 * self.width
        if lo < self.xi_min + margin - slack or hi > self.xi_max - margin + slack:
            raise RangeNotCovered(
                f"Values in [{lo:.6g}, {hi:.6g}] leave less than {MARGIN_CELLS} cells of margin "
                f"in the xi grid [{self.xi_min:.6g}, {self.xi_max:.6g}]"
            )

    def nearest_cell(self, values: np.ndarray) -> np.ndarray:
        """Index of the cell whose centre is nearest (values must lie in the grid range)."""
        index = np.floor((np.asarray(values, dtype=float) - self.xi_min) / self.width).astype(int)
        return np.clip(index, 0, self.cells - 1)
