"""
Model nonlinearities: flux B, velocity b = B', diffusion A and its square
root sigma, together with the approximations of the vanishing-viscosity
ladder (viscosity kappa, truncation tau).

    A^{kappa,tau}(xi) = (sqrt(kappa) + sigma(clamp(xi)))^2
    (b^tau)'(xi)      = b'(clamp(xi)),      clamp(xi) = sgn(xi) min(|xi|, 1/tau)
"""

import logging
import math
from typing import Callable, List, Optional

import numpy as np
from numpy.polynomial.legendre import leggauss
from pydantic import BaseModel, ConfigDict, Field, field_validator

from kspde.config.manager import ModelConfig
from kspde.errors import InvalidModel

logger = logging.getLogger(__name__)

ScalarFn = Callable[[np.ndarray], np.ndarray]

GAUSS_NODES = 48
_FD_STEP = 1e-6


def gauss_integral(fn: ScalarFn, upper, nodes: int = GAUSS_NODES) -> np.ndarray:
    """Vectorized Gauss-Legendre approximation of int_0^upper fn."""
    x, w = leggauss(nodes)
    upper = np.asarray(upper, dtype=float)
    points = upper[..., None] * (x + 1.0) / 2.0
    return (upper / 2.0) * np.sum(w * fn(points), axis=-1)


def odd_power_integral(u, power: float) -> np.ndarray:
    """int_0^u |z|^power dz."""
    u = np.asarray(u, dtype=float)
    return np.sign(u) * np.abs(u) ** (power + 1.0) / (power + 1.0)


class ModelSpec(BaseModel):
    """Closed-form nonlinearities B(xi) = xi^k/k and A(xi) = |xi|^(m-1), or user callables."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    flux_exponent: Optional[int] = Field(2, description="k; None switches the flux off")
    diffusion_exponent: Optional[float] = Field(None, description="m; None switches the diffusion off")
    viscosity: float = Field(0.0, ge=0.0, description="kappa")
    truncation: float = Field(0.0, ge=0.0, description="tau (0 = no truncation)")
    flux_direction: Optional[List[float]] = Field(None, description="Direction vector for N=2 (all ones by default)")
    custom_b: Optional[ScalarFn] = Field(None, exclude=True, description="Overrides b(xi)")
    custom_sigma: Optional[ScalarFn] = Field(None, exclude=True, description="Overrides sigma(xi)")

    @field_validator("flux_exponent")
    @classmethod
    def validate_flux_exponent(cls, v: Optional[int]) -> Optional[int]:
        if v is not None and v < 2:
            raise InvalidModel(f"flux exponent k must be >= 2, got {v}")
        return v

    @field_validator("diffusion_exponent")
    @classmethod
    def validate_diffusion_exponent(cls, v: Optional[float]) -> Optional[float]:
        if v is not None and v <= 2:
            raise InvalidModel(f"diffusion exponent m must be > 2, got {v}")
        return v

    @classmethod
    def from_config(cls, config: ModelConfig) -> "ModelSpec":
        return cls(**config.model_dump())

    # -- switches ---------------------------------------------------------

    @property
    def flux_on(self) -> bool:
        return self.custom_b is not None or self.flux_exponent is not None

    @property
    def diffusion_on(self) -> bool:
        return self.custom_sigma is not None or self.diffusion_exponent is not None

    @property
    def radius(self) -> float:
        """Truncation radius R = 1/tau (inf when tau = 0)."""
        return 1.0 / self.truncation if self.truncation > 0 else math.inf

    def clamp(self, xi, tau: Optional[float] = None) -> np.ndarray:
        radius = self.radius if tau is None else (1.0 / tau if tau > 0 else math.inf)
        return np.clip(np.asarray(xi, dtype=float), -radius, radius)

    def direction(self, dim: int) -> np.ndarray:
        if self.flux_direction is None:
            return np.ones(dim)
        d = np.asarray(self.flux_direction, dtype=float)
        if d.shape != (dim,):
            raise InvalidModel(f"flux direction {self.flux_direction} does not match dimension {dim}")
        return d

    def weight_order(self) -> float:
        """Default order p = max(k, m) - 2 of the weight theta(xi) = 1 + |xi|^p."""
        k = self.flux_exponent or 2
        m = self.diffusion_exponent or 0.0
        return max(float(k), float(m)) - 2.0

    # -- flux -------------------------------------------------------------

    def b(self, xi) -> np.ndarray:
        xi = np.asarray(xi, dtype=float)
        if self.custom_b is not None:
            return np.asarray(self.custom_b(xi), dtype=float)
        if self.flux_exponent is None:
            return np.zeros_like(xi)
        return xi ** (self.flux_exponent - 1)

    def b_prime(self, xi) -> np.ndarray:
        xi = np.asarray(xi, dtype=float)
        if self.custom_b is not None:
            return (self.b(xi + _FD_STEP) - self.b(xi - _FD_STEP)) / (2 * _FD_STEP)
        if self.flux_exponent is None:
            return np.zeros_like(xi)
        k = self.flux_exponent
        return (k - 1) * xi ** (k - 2)

    def flux(self, xi) -> np.ndarray:
        """B(xi) with B(0) = 0."""
        xi = np.asarray(xi, dtype=float)
        if self.custom_b is not None:
            return gauss_integral(self.b, xi)
        if self.flux_exponent is None:
            return np.zeros_like(xi)
        return xi ** self.flux_exponent / self.flux_exponent

    def b_tau(self, xi, tau: Optional[float] = None) -> np.ndarray:
        """Truncated velocity: b inside the radius, continued linearly outside."""
        xi = np.asarray(xi, dtype=float)
        c = self.clamp(xi, tau)
        return self.b(c) + self.b_prime(c) * (xi - c)

    def b_tau_prime(self, xi, tau: Optional[float] = None) -> np.ndarray:
        return self.b_prime(self.clamp(xi, tau))

    def flux_tau(self, xi, tau: Optional[float] = None) -> np.ndarray:
        """B^tau = int_0^xi b^tau."""
        xi = np.asarray(xi, dtype=float)
        c = self.clamp(xi, tau)
        dz = xi - c
        return self.flux(c) + self.b(c) * dz + 0.5 * self.b_prime(c) * dz ** 2

    def flux_plus(self, u) -> np.ndarray:
        """Nondecreasing part of B^tau: int_0^u max(b^tau, 0)."""
        u = np.asarray(u, dtype=float)
        if self.custom_b is not None:
            return gauss_integral(lambda z: np.maximum(self.b_tau(z), 0.0), u)
        if self.flux_exponent is None:
            return np.zeros_like(u)
        if self.flux_exponent % 2 == 0:
            return self.flux_tau(np.maximum(u, 0.0))
        return self.flux_tau(u)

    def flux_minus(self, u) -> np.ndarray:
        """Nonincreasing part: B^tau - flux_plus."""
        u = np.asarray(u, dtype=float)
        if self.custom_b is not None:
            return self.flux_tau(u) - self.flux_plus(u)
        if self.flux_exponent is None or self.flux_exponent % 2 == 1:
            return np.zeros_like(u)
        return self.flux_tau(np.minimum(u, 0.0))

    def max_speed(self, lo: float, hi: float, samples: int = 257) -> float:
        """max |b^tau| over [lo, hi]."""
        xi = np.append(np.linspace(lo, hi, samples), 0.0 if lo <= 0.0 <= hi else lo)
        return float(np.max(np.abs(self.b_tau(xi))))

    # -- diffusion --------------------------------------------------------

    def sigma(self, xi) -> np.ndarray:
        xi = np.asarray(xi, dtype=float)
        if self.custom_sigma is not None:
            return np.asarray(self.custom_sigma(xi), dtype=float)
        if self.diffusion_exponent is None:
            return np.zeros_like(xi)
        return np.abs(xi) ** ((self.diffusion_exponent - 1.0) / 2.0)

    def diffusion(self, xi) -> np.ndarray:
        """A(xi) = sigma(xi)^2 (scalar; the N=2 matrix is A times the identity)."""
        xi = np.asarray(xi, dtype=float)
        if self.custom_sigma is not None:
            return self.sigma(xi) ** 2
        if self.diffusion_exponent is None:
            return np.zeros_like(xi)
        return np.abs(xi) ** (self.diffusion_exponent - 1.0)

    def diffusion_prime(self, xi) -> np.ndarray:
        xi = np.asarray(xi, dtype=float)
        if self.custom_sigma is not None:
            return (self.diffusion(xi + _FD_STEP) - self.diffusion(xi - _FD_STEP)) / (2 * _FD_STEP)
        if self.diffusion_exponent is None:
            return np.zeros_like(xi)
        m = self.diffusion_exponent
        return (m - 1.0) * np.sign(xi) * np.abs(xi) ** (m - 2.0)

    def sigma_reg(self, xi, kappa: Optional[float] = None, tau: Optional[float] = None) -> np.ndarray:
        kappa = self.viscosity if kappa is None else kappa
        return math.sqrt(kappa) + self.sigma(self.clamp(xi, tau))

    def diffusion_reg(self, xi, kappa: Optional[float] = None, tau: Optional[float] = None) -> np.ndarray:
        return self.sigma_reg(xi, kappa, tau) ** 2

    def _sigma_integrals(self, c: np.ndarray):
        """(int_0^c sigma, int_0^c sigma^2) on the untruncated branch."""
        if self.custom_sigma is not None:
            return gauss_integral(self.sigma, c), gauss_integral(lambda z: self.sigma(z) ** 2, c)
        if self.diffusion_exponent is None:
            return np.zeros_like(c), np.zeros_like(c)
        q = (self.diffusion_exponent - 1.0) / 2.0
        return odd_power_integral(c, q), odd_power_integral(c, 2.0 * q)

    def psi(self, u) -> np.ndarray:
        """Psi(u) = int_0^u sigma^{kappa,tau}; the parabolic dissipation density is |grad Psi(u)|^2."""
        u = np.asarray(u, dtype=float)
        c = self.clamp(u)
        s1, _ = self._sigma_integrals(c)
        return math.sqrt(self.viscosity) * c + s1 + self.sigma_reg(c) * (u - c)

    def phi(self, u) -> np.ndarray:
        """Phi(u) = int_0^u A^{kappa,tau}; the diffusion term reads Laplacian(Phi(u))."""
        u = np.asarray(u, dtype=float)
        c = self.clamp(u)
        s1, s2 = self._sigma_integrals(c)
        root = math.sqrt(self.viscosity)
        return self.viscosity * c + 2.0 * root * s1 + s2 + self.diffusion_reg(c) * (u - c)

    def max_diffusion(self, lo: float, hi: float, samples: int = 257) -> float:
        """max A^{kappa,tau} over [lo, hi]."""
        xi = np.append(np.linspace(lo, hi, samples), [lo, hi])
        return float(np.max(self.diffusion_reg(xi)))


def regularized_sigma(spec: ModelSpec, kappa: float, tau: float, xi) -> np.ndarray:
    """sqrt(kappa) + sigma(clamp(xi)) with clamp radius 1/tau."""
    return spec.sigma_reg(xi, kappa=kappa, tau=tau)


def truncated_flux_derivative(spec: ModelSpec, tau: float, xi, dim: int = 1) -> np.ndarray:
    """(b^tau)'(xi) times the flux direction; shape (..., dim) for dim > 1."""
    value = spec.b_tau_prime(xi, tau)
    if dim == 1:
        return value
    return np.asarray(value)[..., None] * spec.direction(dim)
