"""
Shared kernels: smoothstep bumps, dyadic partitions and discrete multiplier norms.
"""

from .bumps import BumpSpec, SmoothstepOrder, psi0, psi1, psi_tilde, smoothstep, zeta
from .kernels import (
    dyadic_symbol_split,
    kernel_l1_norm,
    spacetime_forward,
    spacetime_frequencies,
    spacetime_inverse,
    symbol_magnitude,
)
from .partition import SymbolPartition, dyadic_levels, partition_weights

__all__ = [
    "BumpSpec",
    "SmoothstepOrder",
    "SymbolPartition",
    "dyadic_levels",
    "dyadic_symbol_split",
    "kernel_l1_norm",
    "partition_weights",
    "psi0",
    "psi1",
    "psi_tilde",
    "smoothstep",
    "spacetime_forward",
    "spacetime_frequencies",
    "spacetime_inverse",
    "symbol_magnitude",
    "zeta",
]
