"""
Dyadic Littlewood-Paley decomposition of grid functions.

Block 0 carries psi_0(|n|) and block J the annulus weight psi_1(|n|/J), J = 1, 2, 4, ...
up to the first J covering the largest lattice frequency, so the weights sum to
one at every lattice point.
"""

from typing import Dict

import numpy as np

from kspde.field import Field, SpectralField, TorusGrid, forward_transform, inverse_transform, lp_norm
from kspde.multiplier_kernels import dyadic_levels, partition_weights


def lattice_levels(grid: TorusGrid) -> list:
    return dyadic_levels(float(grid.frequency_magnitude().max()))


def block_weights(grid: TorusGrid) -> Dict[int, np.ndarray]:
    """Partition weights on the centred lattice, keyed by block index (0 = low block)."""
    return partition_weights(grid.frequency_magnitude(), lattice_levels(grid))


def littlewood_paley_blocks(f: Field) -> Dict[int, Field]:
    spectrum = forward_transform(f)
    blocks = {}
    for level, weight in block_weights(f.grid).items():
        blocks[level] = inverse_transform(SpectralField(f.grid, spectrum.coefficients * weight))
    return blocks


def block_norms(blocks: Dict[int, Field], r: float = 1.0) -> Dict[int, float]:
    return {level: lp_norm(block, r) for level, block in blocks.items()}


def block_energy_fractions(f: Field) -> Dict[int, float]:
    """Share of sum |c_n|^2 carried by each block (blocks overlap, so shares may exceed 1 in total)."""
    spectrum = forward_transform(f)
    power = np.abs(spectrum.coefficients) ** 2
    total = float(power.sum())
    if total == 0.0:
        return {level: 0.0 for level in block_weights(f.grid)}
    return {level: float(np.sum(power * weight ** 2) / total) for level, weight in block_weights(f.grid).items()}
