"""
Truncated cylindrical Wiener process driven by a counter-based generator.

The increment of step s is a pure function of (seed, s): the Philox key is
the seed and the counter starts at s << 64, so streams of different steps
never overlap and can be drawn in any order.
"""

import logging
import math
from dataclasses import dataclass

import numpy as np

from kspde.errors import HorizonExceeded

logger = logging.getLogger(__name__)

_MASK64 = (1 << 64) - 1


def member_seed(seed_base: int, index: int) -> int:
    """Independent 64-bit key for ensemble member ``index``."""
    sequence = np.random.SeedSequence(int(seed_base), spawn_key=(int(index),))
    return int(sequence.generate_state(1, dtype=np.uint64)[0])


@dataclass(frozen=True)
class WienerPath:
    """Increments Delta B_k ~ N(0, dt) for k = 1..K over steps [0, horizon)."""

    seed: int
    dt: float
    mode_count: int
    horizon: int

    def __post_init__(self) -> None:
        if self.dt <= 0:
            raise ValueError(f"dt must be positive, got {self.dt}")
        if self.mode_count < 0 or self.horizon < 0:
            raise ValueError("mode_count and horizon must be nonnegative")

    def _generator(self, step_index: int) -> np.random.Generator:
        bit_generator = np.random.Philox(key=int(self.seed) & _MASK64, counter=int(step_index) << 64)
        return np.random.Generator(bit_generator)

    def sample_increments(self, step_index: int) -> np.ndarray:
        if not 0 <= step_index < self.horizon:
            raise HorizonExceeded(f"Step {step_index} outside horizon [0, {self.horizon})")
        if self.mode_count == 0:
            return np.zeros(0)
        return self._generator(step_index).standard_normal(self.mode_count) * math.sqrt(self.dt)

    def increments(self) -> np.ndarray:
        """All increments, shape (horizon, K)."""
        if self.horizon == 0:
            return np.zeros((0, self.mode_count))
        return np.stack([self.sample_increments(s) for s in range(self.horizon)])

    def values(self) -> np.ndarray:
        """B_k(t_s) for s = 0..horizon, shape (horizon + 1, K), starting at zero."""
        path = np.zeros((self.horizon + 1, self.mode_count))
        path[1:] = np.cumsum(self.increments(), axis=0)
        return path
