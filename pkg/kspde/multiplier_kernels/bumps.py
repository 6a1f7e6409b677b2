"""
Smoothstep bumps and the dyadic partition functions built from them.

zeta(r) = 1 on r <= 1, 0 on r >= 2, smoothstep in between.
psi_0(z) = zeta(2|z|) is supported in |z| <= 1 and psi_1(z) = zeta(|z|) - zeta(2|z|)
in the annulus 1/2 <= |z| <= 2, so psi_0(z) + sum_{K=1,2,4,..} psi_1(z/K) telescopes to 1.
"""

from enum import Enum

import numpy as np
from pydantic import BaseModel, Field


class SmoothstepOrder(str, Enum):
    CUBIC = "cubic"
    QUINTIC = "quintic"
    SEPTIC = "septic"


def smoothstep(t, order: SmoothstepOrder = SmoothstepOrder.QUINTIC) -> np.ndarray:
    """Monotone 0 -> 1 transition on [0, 1]; C^1 (cubic), C^2 (quintic) or C^3 (septic) at the ends."""
    t = np.clip(np.asarray(t, dtype=float), 0.0, 1.0)
    if order == SmoothstepOrder.CUBIC:
        return t * t * (3.0 - 2.0 * t)
    if order == SmoothstepOrder.SEPTIC:
        return t ** 4 * (35.0 + t * (-84.0 + t * (70.0 - 20.0 * t)))
    return t ** 3 * (t * (6.0 * t - 15.0) + 10.0)


def zeta(r, order: SmoothstepOrder = SmoothstepOrder.QUINTIC) -> np.ndarray:
    """1 on r <= 1, 0 on r >= 2."""
    return 1.0 - smoothstep(np.asarray(r, dtype=float) - 1.0, order)


def psi0(z, order: SmoothstepOrder = SmoothstepOrder.QUINTIC) -> np.ndarray:
    return zeta(2.0 * np.abs(z), order)


def psi1(z, order: SmoothstepOrder = SmoothstepOrder.QUINTIC) -> np.ndarray:
    magnitude = np.abs(z)
    return zeta(magnitude, order) - zeta(2.0 * magnitude, order)


def psi_tilde(z, order: SmoothstepOrder = SmoothstepOrder.QUINTIC) -> np.ndarray:
    """psi_1(z) / z, finite because psi_1 vanishes for |z| < 1/2."""
    z = np.asarray(z, dtype=float)
    safe = np.where(np.abs(z) < 0.25, 1.0, z)
    return np.where(np.abs(z) < 0.25, 0.0, psi1(z, order) / safe)


class BumpSpec(BaseModel):
    """A radial bump: zeta(|z - center| / radius), or psi_1 scaled by radius when annulus is set."""
    center: float = Field(0.0, description="Centre")
    radius: float = Field(1.0, gt=0.0, description="Scale; the plateau is |z - c| <= radius")
    order: SmoothstepOrder = Field(SmoothstepOrder.QUINTIC, description="Smoothstep order")
    annulus: bool = Field(False, description="Use the annulus profile psi_1")

    def __call__(self, z) -> np.ndarray:
        s = (np.asarray(z, dtype=float) - self.center) / self.radius
        if self.annulus:
            return psi1(s, self.order)
        return zeta(np.abs(s), self.order)

    @property
    def support_radius(self) -> float:
        return 2.0 * self.radius
