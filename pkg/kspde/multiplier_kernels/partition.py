"""
Dyadic partitions of unity in frequency or in symbol magnitude.
"""

from dataclasses import dataclass
from typing import Dict, List

import numpy as np

from kspde.multiplier_kernels.bumps import SmoothstepOrder, psi0, psi1


def dyadic_levels(max_magnitude: float) -> List[int]:
    """1, 2, 4, ... up to the first level K with K >= max_magnitude."""
    levels = [1]
    while levels[-1] < max_magnitude:
        levels.append(2 * levels[-1])
    return levels


def partition_weights(
    magnitude: np.ndarray, levels: List[int], order: SmoothstepOrder = SmoothstepOrder.QUINTIC
) -> Dict[int, np.ndarray]:
    """{0: psi_0(z), K: psi_1(z/K)}; the weights sum to 1 wherever z <= max(levels)."""
    magnitude = np.asarray(magnitude, dtype=float)
    weights = {0: psi0(magnitude, order)}
    for level in levels:
        weights[level] = psi1(magnitude / level, order)
    return weights


@dataclass(frozen=True)
class SymbolPartition:
    """Weights psi_0(|L|/delta) and psi_1(|L|/(delta K)) on a transform grid."""

    delta: float
    levels: List[int]
    weights: Dict[int, np.ndarray]

    @classmethod
    def build(cls, symbol_magnitude: np.ndarray, delta: float) -> "SymbolPartition":
        scaled = np.asarray(symbol_magnitude, dtype=float) / delta
        levels = dyadic_levels(float(scaled.max()) if scaled.size else 1.0)
        return cls(delta=delta, levels=levels, weights=partition_weights(scaled, levels))

    def total(self) -> np.ndarray:
        return sum(self.weights.values())
