"""
Cutoff and mollifier families used by the decay diagnostics.

K_l(xi) = K(xi / 2^l) with K = 1 on |s| <= 1, 0 on |s| >= 2 and a quintic
smoothstep between, so |K_l'| <= (15/8) 2^-l on the dyadic shell.
"""

import numpy as np
from pydantic import BaseModel, Field

from kspde.models import CutoffKind
from kspde.multiplier_kernels.bumps import smoothstep, zeta

SMOOTHSTEP_SLOPE = 15.0 / 8.0
_MOLLIFIER_NORM = 35.0 / 32.0


def plateau(s) -> np.ndarray:
    """1 on |s| <= 1, 0 on |s| >= 2."""
    return zeta(np.abs(np.asarray(s, dtype=float)))


class CutoffFamily(BaseModel):
    kind: CutoffKind = Field(..., description="Family")
    parameter: float = Field(..., description="l for K_ell, k for theta_k/Theta_k, width for the mollifiers")


def cutoff_eval(family: CutoffFamily, xi) -> np.ndarray:
    xi = np.asarray(xi, dtype=float)
    p = family.parameter
    if family.kind == CutoffKind.K_ELL:
        return plateau(xi / 2.0 ** p)
    if family.kind == CutoffKind.THETA_K:
        return (np.abs(xi) <= p).astype(float)
    if family.kind == CutoffKind.BIG_THETA_K:
        magnitude = np.abs(xi)
        return np.where(magnitude <= p, 0.5 * xi ** 2, 0.5 * p ** 2 + p * (magnitude - p))
    if family.kind in (CutoffKind.PSI_DELTA, CutoffKind.RHO_EPS):
        s = xi / p
        return np.where(np.abs(s) <= 1.0, _MOLLIFIER_NORM * (1.0 - s ** 2) ** 3 / p, 0.0)
    raise ValueError(f"Unsupported cutoff family: {family.kind}")
