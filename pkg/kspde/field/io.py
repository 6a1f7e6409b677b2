"""
Field persistence: the KSPD binary dump and CSV export.

Binary layout (little-endian): magic b"KSPD", version u32, dim u32,
points u32, then points**dim f64 values in row-major order.
"""

import logging
import struct
from pathlib import Path
from typing import Union

import numpy as np
import pandas as pd

from kspde.field.grid import Field, TorusGrid

logger = logging.getLogger(__name__)

MAGIC = b"KSPD"
FORMAT_VERSION = 1
_HEADER = struct.Struct("<4sIII")


def write_binary(field: Field, path: Union[str, Path]) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    header = _HEADER.pack(MAGIC, FORMAT_VERSION, field.grid.dim, field.grid.points_per_dim)
    with open(path, "wb") as f:
        f.write(header)
        f.write(np.ascontiguousarray(field.values, dtype="<f8").tobytes())
    logger.debug(f"Wrote field dump {path}")
    return path


def read_binary(path: Union[str, Path]) -> Field:
    path = Path(path)
    data = path.read_bytes()
    if len(data) < _HEADER.size:
        raise ValueError(f"{path} is too short to be a field dump")
    magic, version, dim, points = _HEADER.unpack_from(data)
    if magic != MAGIC:
        raise ValueError(f"{path} is not a field dump (magic {magic!r})")
    if version != FORMAT_VERSION:
        raise ValueError(f"Unsupported field dump version {version}")
    grid = TorusGrid(dim=dim, points_per_dim=points)
    values = np.frombuffer(data, dtype="<f8", offset=_HEADER.size)
    return Field(grid, values)


def to_frame(field: Field) -> pd.DataFrame:
    """One row per grid point with columns x[, y], value."""
    names = ["x", "y"][: field.grid.dim]
    columns = {name: axis.ravel() for name, axis in zip(names, field.coordinates())}
    columns["value"] = field.values.ravel()
    return pd.DataFrame(columns)


def write_csv(field: Field, path: Union[str, Path]) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    to_frame(field).to_csv(path, index=False, float_format="%.17g")
    return path
