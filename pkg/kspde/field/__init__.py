"""
Periodic grids, grid functions, norms and spectral transforms.
"""

from .grid import Field, TorusGrid, TWO_PI
from .io import read_binary, to_frame, write_binary, write_csv
from .norms import l1_norm, l2_norm, lp_norm, positive_part_l1
from .transforms import SpectralField, forward_transform, hermitian_defect, inverse_transform, mirror

__all__ = [
    "Field",
    "TorusGrid",
    "TWO_PI",
    "SpectralField",
    "forward_transform",
    "inverse_transform",
    "hermitian_defect",
    "mirror",
    "lp_norm",
    "l1_norm",
    "l2_norm",
    "positive_part_l1",
    "read_binary",
    "write_binary",
    "to_frame",
    "write_csv",
]
