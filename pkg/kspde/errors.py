"""
Exception hierarchy for kspde.

Every numerical failure is raised, never corrected silently. Each class also
inherits from the closest builtin so callers can catch either.
"""

from typing import Any, Dict, List, Optional, Tuple


class KspdeError(Exception):
    """Base class for all kspde errors."""


class SymmetryViolation(KspdeError, ValueError):
    """Spectral coefficients are not Hermitian symmetric."""


class InvalidExponent(KspdeError, ValueError):
    """A norm or Sobolev exponent is outside its admissible range."""


class GridMismatch(KspdeError, ValueError):
    """Two fields (or a field and an operator) live on different grids."""


class EmptyFrequencyShell(KspdeError, ValueError):
    """No lattice point lies in the requested dyadic frequency shell."""


class DegenerateFit(KspdeError, ValueError):
    """The regression design matrix is rank deficient."""


class InvalidModel(KspdeError, ValueError):
    """Model exponents are outside the admissible range."""


class HorizonExceeded(KspdeError, IndexError):
    """A Wiener increment was requested outside the configured horizon."""


class StepCountMismatch(KspdeError, ValueError):
    """t_end is not an integer multiple of dt."""


class RangeNotCovered(KspdeError, ValueError):
    """The velocity grid does not cover the range of the solution."""


class CouplingMismatch(KspdeError, ValueError):
    """Trajectories compared for contraction were not driven by the same noise."""


class InsufficientResolution(KspdeError, ValueError):
    """Too few dyadic levels are resolvable on the grid."""


class NonFinite(KspdeError, FloatingPointError):
    """A field contains NaN or infinite values."""


class UnknownExperiment(KspdeError, KeyError):
    """The requested experiment is not registered."""


class BoundViolation(KspdeError, ValueError):
    """Noise coefficients break the growth bounds they are required to satisfy."""

    def __init__(self, message: str, offenders: List[Tuple[int, float, float]]):
        super().__init__(message)
        self.offenders = offenders


class CflViolation(KspdeError, ValueError):
    """The time step exceeds the stability restriction of a substep."""

    def __init__(self, message: str, admissible_dt: float):
        super().__init__(f"{message} (admissible dt <= {admissible_dt:.6g})")
        self.admissible_dt = admissible_dt


class LinearSolveFailure(KspdeError, RuntimeError):
    """The semi-implicit diffusion system could not be solved."""

    def __init__(self, message: str, diagnostics: Optional[Dict[str, Any]] = None):
        super().__init__(message)
        self.diagnostics = diagnostics or {}


class MemberFailure(KspdeError, RuntimeError):
    """An ensemble member failed; wraps the cause with the member seed."""

    def __init__(self, seed: int, cause: BaseException):
        super().__init__(f"Ensemble member with seed {seed} failed: {cause}")
        self.seed = seed
        self.cause = cause
