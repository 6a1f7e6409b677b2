"""
Periodic grids and grid functions on the torus T^N = [0, 2*pi)^N.
"""

import logging
import math
from dataclasses import dataclass
from typing import Callable, Tuple, Union

import numpy as np
from pydantic import BaseModel, ConfigDict, Field as PydanticField, field_validator

from kspde.errors import GridMismatch, NonFinite

logger = logging.getLogger(__name__)

TWO_PI = 2.0 * math.pi


class TorusGrid(BaseModel):
    """Uniform cell-centred grid with points_per_dim points in each of dim directions."""

    model_config = ConfigDict(frozen=True)

    dim: int = PydanticField(1, description="Spatial dimension N (1 or 2)")
    points_per_dim: int = PydanticField(128, description="Points per dimension (power of two, >= 8)")

    @field_validator("dim")
    @classmethod
    def validate_dim(cls, v: int) -> int:
        if v not in (1, 2):
            raise ValueError(f"dim must be 1 or 2, got {v}")
        return v

    @field_validator("points_per_dim")
    @classmethod
    def validate_points(cls, v: int) -> int:
        if v < 8 or v & (v - 1):
            raise ValueError(f"points_per_dim must be a power of two >= 8, got {v}")
        return v

    @property
    def spacing(self) -> float:
        return TWO_PI / self.points_per_dim

    @property
    def shape(self) -> Tuple[int, ...]:
        return (self.points_per_dim,) * self.dim

    @property
    def size(self) -> int:
        return self.points_per_dim ** self.dim

    @property
    def cell_volume(self) -> float:
        """h^N, the quadrature weight of every grid point."""
        return self.spacing ** self.dim

    @property
    def volume(self) -> float:
        return TWO_PI ** self.dim

    def axis(self) -> np.ndarray:
        """Grid coordinates along one axis (x_j = j*h)."""
        return np.arange(self.points_per_dim) * self.spacing

    def coordinates(self) -> Tuple[np.ndarray, ...]:
        """Coordinate arrays shaped like the grid (``ij`` indexing)."""
        axis = self.axis()
        if self.dim == 1:
            return (axis,)
        return tuple(np.meshgrid(axis, axis, indexing="ij"))

    def frequencies(self) -> Tuple[np.ndarray, ...]:
        """Centred integer frequencies n in [-P/2, P/2) per axis, shaped like the grid."""
        k = np.arange(-(self.points_per_dim // 2), self.points_per_dim // 2)
        if self.dim == 1:
            return (k,)
        return tuple(np.meshgrid(k, k, indexing="ij"))

    def frequency_magnitude(self) -> np.ndarray:
        """|n| on the centred lattice."""
        return np.sqrt(sum(n.astype(float) ** 2 for n in self.frequencies()))

    def ensure_same(self, other: "TorusGrid") -> None:
        if self != other:
            raise GridMismatch(f"Grid mismatch: {self} vs {other}")


@dataclass(frozen=True, eq=False)
class Field:
    """Real grid function u(x); values are read-only and always finite."""

    grid: TorusGrid
    values: np.ndarray

    def __post_init__(self) -> None:
        values = np.array(self.values, dtype=np.float64)
        if values.size != self.grid.size:
            raise GridMismatch(
                f"Field has {values.size} values but grid holds {self.grid.size} points"
            )
        values = values.reshape(self.grid.shape)
        if not np.all(np.isfinite(values)):
            raise NonFinite("Field contains non-finite values")
        values.setflags(write=False)
        object.__setattr__(self, "values", values)

    @classmethod
    def zeros(cls, grid: TorusGrid) -> "Field":
        return cls(grid, np.zeros(grid.shape))

    @classmethod
    def constant(cls, grid: TorusGrid, value: float) -> "Field":
        return cls(grid, np.full(grid.shape, float(value)))

    @classmethod
    def from_function(cls, grid: TorusGrid, fn: Callable[..., np.ndarray]) -> "Field":
        """Sample fn(x) (or fn(x, y)) at the grid points."""
        values = np.broadcast_to(fn(*grid.coordinates()), grid.shape)
        return cls(grid, values)

    def mass(self) -> float:
        """Riemann sum of u over the torus."""
        return float(self.values.sum() * self.grid.cell_volume)

    def coordinates(self) -> Tuple[np.ndarray, ...]:
        return self.grid.coordinates()

    def with_values(self, values: np.ndarray) -> "Field":
        return Field(self.grid, values)

    def _coerce(self, other: Union["Field", float]) -> Union[np.ndarray, float]:
        if isinstance(other, Field):
            self.grid.ensure_same(other.grid)
            return other.values
        return float(other)

    def __add__(self, other: Union["Field", float]) -> "Field":
        return Field(self.grid, self.values + self._coerce(other))

    def __sub__(self, other: Union["Field", float]) -> "Field":
        return Field(self.grid, self.values - self._coerce(other))

    def __mul__(self, scalar: float) -> "Field":
        return Field(self.grid, self.values * float(scalar))

    __rmul__ = __mul__

    def __neg__(self) -> "Field":
        return Field(self.grid, -self.values)

    def __repr__(self) -> str:
        return f"Field(dim={self.grid.dim}, points={self.grid.points_per_dim})"
