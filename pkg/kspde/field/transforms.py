"""
Spectral transforms with the normalization

    c(n) = (2*pi)^(-N/2) * sum_x v(x) e^{-i n.x} h^N,
    v(x) = (2*pi)^(-N/2) * sum_n c(n) e^{i n.x},

stored on the centred lattice n in [-P/2, P/2)^N. The Nyquist mode -P/2 is
kept so that round trips are exact.
"""

import logging
import math
from dataclasses import dataclass

import numpy as np

from kspde.errors import SymmetryViolation
from kspde.field.grid import Field, TorusGrid

logger = logging.getLogger(__name__)

SYMMETRY_TOLERANCE = 1e-8
IMAGINARY_TOLERANCE = 1e-10


@dataclass(frozen=True, eq=False)
class SpectralField:
    """Fourier coefficients of a real field, centred."""

    grid: TorusGrid
    coefficients: np.ndarray

    def __post_init__(self) -> None:
        coefficients = np.array(self.coefficients, dtype=np.complex128).reshape(self.grid.shape)
        coefficients.setflags(write=False)
        object.__setattr__(self, "coefficients", coefficients)

    @classmethod
    def zeros(cls, grid: TorusGrid) -> "SpectralField":
        return cls(grid, np.zeros(grid.shape, dtype=np.complex128))

    def frequencies(self):
        return self.grid.frequencies()

    def coefficient(self, *n: int) -> complex:
        """Coefficient at the integer frequency n."""
        half = self.grid.points_per_dim // 2
        index = tuple((k + half) % self.grid.points_per_dim for k in n)
        return complex(self.coefficients[index])

    def energy(self) -> float:
        """l^2 norm squared of the coefficients."""
        return float(np.sum(np.abs(self.coefficients) ** 2))


def _normalization(grid: TorusGrid) -> float:
    return (2.0 * math.pi) ** (-grid.dim / 2.0)


def mirror(coefficients: np.ndarray) -> np.ndarray:
    """Array whose entry at n is the entry at -n (centred storage, aliasing -P/2 to itself)."""
    out = coefficients
    for axis in range(coefficients.ndim):
        out = np.roll(np.flip(out, axis=axis), 1, axis=axis)
    return out


def hermitian_defect(coefficients: np.ndarray) -> float:
    """max |c(n) - conj(c(-n))|."""
    if coefficients.size == 0:
        return 0.0
    return float(np.max(np.abs(coefficients - np.conj(mirror(coefficients)))))


def forward_transform(f: Field) -> SpectralField:
    grid = f.grid
    raw = np.fft.fftn(f.values) * grid.cell_volume * _normalization(grid)
    return SpectralField(grid, np.fft.fftshift(raw))


def inverse_transform(g: SpectralField) -> Field:
    grid = g.grid
    scale = max(1.0, float(np.max(np.abs(g.coefficients))))
    defect = hermitian_defect(g.coefficients)
    if defect > SYMMETRY_TOLERANCE * scale:
        raise SymmetryViolation(f"Coefficients are not Hermitian: defect {defect:.3e}")

    values = np.fft.ifftn(np.fft.ifftshift(g.coefficients)) * grid.size * _normalization(grid)
    residue = float(np.max(np.abs(values.imag))) if values.size else 0.0
    if residue > IMAGINARY_TOLERANCE * scale * grid.size:
        raise SymmetryViolation(f"Imaginary residue {residue:.3e} after inverse transform")
    return Field(grid, values.real)
