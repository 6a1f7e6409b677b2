"""
Monte-Carlo ensembles of scalar series.
"""

from dataclasses import dataclass
from typing import Sequence

import numpy as np

ACCEPTANCE_MEMBERS = 8


@dataclass(frozen=True, eq=False)
class EnsembleResult:
    """Per-member series stacked as (members, points)."""

    series: np.ndarray

    def __post_init__(self) -> None:
        series = np.atleast_2d(np.asarray(self.series, dtype=float))
        series.setflags(write=False)
        object.__setattr__(self, "series", series)

    @classmethod
    def from_series(cls, series: Sequence[Sequence[float]]) -> "EnsembleResult":
        return cls(np.stack([np.asarray(s, dtype=float) for s in series]))

    @classmethod
    def from_scalars(cls, values: Sequence[float]) -> "EnsembleResult":
        return cls(np.asarray(values, dtype=float).reshape(-1, 1))

    @property
    def member_count(self) -> int:
        return self.series.shape[0]

    @property
    def mean(self) -> np.ndarray:
        return self.series.mean(axis=0)

    @property
    def stderr(self) -> np.ndarray:
        """Sample standard deviation over sqrt(M); zero for a single member."""
        if self.member_count < 2:
            return np.zeros(self.series.shape[1])
        return self.series.std(axis=0, ddof=1) / np.sqrt(self.member_count)

    def require_acceptance_size(self) -> None:
        if self.member_count < ACCEPTANCE_MEMBERS:
            raise ValueError(
                f"Acceptance checks need at least {ACCEPTANCE_MEMBERS} members, got {self.member_count}"
            )
