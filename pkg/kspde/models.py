from enum import Enum
from typing import Optional

from pydantic import BaseModel, Field


class FluxScheme(str, Enum):
    """Monotone numerical fluxes for the convection substep."""
    ENGQUIST_OSHER = "engquist-osher"
    LAX_FRIEDRICHS = "lax-friedrichs"


class DiffusionScheme(str, Enum):
    """Time discretization of the degenerate diffusion substep."""
    EXPLICIT = "explicit"
    SEMI_IMPLICIT = "semi-implicit"


class FaceAverage(str, Enum):
    """How the diffusion coefficient is averaged onto cell faces."""
    INTEGRAL_MEAN = "integral-mean"
    ARITHMETIC = "arithmetic"


class NoiseFamily(str, Enum):
    """Supported coefficient families g_k(x, xi)."""
    ADDITIVE = "additive"
    MULTIPLICATIVE_DEFAULT = "multiplicative-default"
    SINE_LINEAR = "sine-linear"


class EtaKind(str, Enum):
    """Shape of the velocity localization eta."""
    BUMP = "bump"
    INDICATOR = "indicator"
    IDENTITY = "identity"


class SymbolComponent(str, Enum):
    """Which part of the kinetic symbol enters a sublevel-set measurement."""
    FULL = "full"
    HYPERBOLIC = "hyperbolic"
    PARABOLIC = "parabolic"


class CutoffKind(str, Enum):
    """Cutoff and mollifier families used by the kinetic diagnostics."""
    K_ELL = "K_ell"
    THETA_K = "theta_k"
    BIG_THETA_K = "Theta_k"
    PSI_DELTA = "psi_delta"
    RHO_EPS = "rho_eps"


class MeasureComponent(str, Enum):
    """Tag of a kinetic measure histogram."""
    PARABOLIC = "parabolic"
    ENTROPY_DEFECT = "entropy-defect"


class InitialDataKind(str, Enum):
    """Initial data shapes produced by the initial data factory."""
    CONSTANT = "constant"
    COSINE = "cosine"
    SINE = "sine"
    RIEMANN = "riemann"
    BUMP = "bump"
    WHITE_NOISE = "white-noise"


class Verdict(BaseModel):
    """Outcome of one acceptance check."""
    name: str = Field(..., description="Check name")
    passed: bool = Field(..., description="Whether the check passed")
    measured: Optional[float] = Field(None, description="Measured quantity")
    bound: Optional[float] = Field(None, description="Bound it was compared against")
    stderr: Optional[float] = Field(None, description="Monte-Carlo standard error of the measurement")
    detail: Optional[str] = Field(None, description="Free-form explanation")
