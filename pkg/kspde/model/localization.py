"""
Velocity localization eta and weight theta.
"""

import logging
from typing import Optional, Tuple

import numpy as np
from numpy.polynomial import Polynomial
from pydantic import BaseModel, ConfigDict, Field

from kspde.config.manager import LocalizationConfig
from kspde.model.spec import ModelSpec, gauss_integral
from kspde.models import EtaKind

logger = logging.getLogger(__name__)

# eta(s) = (1 - s^2)^3 on |s| <= 1 and its antiderivative
_BUMP = Polynomial([1.0, 0.0, -1.0]) ** 3
_BUMP_PRIME = _BUMP.deriv()
_BUMP_INTEGRAL = _BUMP.integ()


class Localization(BaseModel):
    """
    eta in [0, 1] and theta >= 1.

    BUMP is the C^2 polynomial bump (1 - ((xi - c)/r)^2)^3, INDICATOR the
    characteristic function of [c - r, c + r], and IDENTITY is eta = 1 with
    [c - r, c + r] used as the sampling window wherever a bounded velocity
    range is needed.
    """

    model_config = ConfigDict(frozen=True)

    eta: EtaKind = Field(EtaKind.BUMP, description="Shape of eta")
    center: float = Field(0.0, description="Centre c")
    radius: float = Field(1.0, gt=0.0, description="Half width r")
    weight_order: float = Field(0.0, ge=0.0, description="p in theta(xi) = 1 + |xi|^p (p = 0 gives theta = 1)")

    @classmethod
    def from_config(cls, config: LocalizationConfig, model: Optional[ModelSpec] = None) -> "Localization":
        order = config.weight_order
        if order is None:
            order = model.weight_order() if model is not None else 0.0
        return cls(eta=config.eta, center=config.center, radius=config.radius, weight_order=order)

    def support(self) -> Tuple[float, float]:
        return self.center - self.radius, self.center + self.radius

    def _scaled(self, xi) -> np.ndarray:
        return (np.asarray(xi, dtype=float) - self.center) / self.radius

    def eta_values(self, xi) -> np.ndarray:
        s = self._scaled(xi)
        if self.eta == EtaKind.IDENTITY:
            return np.ones_like(s)
        inside = np.abs(s) <= 1.0
        if self.eta == EtaKind.INDICATOR:
            return inside.astype(float)
        return np.where(inside, _BUMP(np.clip(s, -1.0, 1.0)), 0.0)

    def eta_prime(self, xi) -> np.ndarray:
        s = self._scaled(xi)
        if self.eta != EtaKind.BUMP:
            return np.zeros_like(s)
        return np.where(np.abs(s) <= 1.0, _BUMP_PRIME(np.clip(s, -1.0, 1.0)) / self.radius, 0.0)

    def theta(self, xi) -> np.ndarray:
        xi = np.asarray(xi, dtype=float)
        if self.weight_order == 0.0:
            return np.ones_like(xi)
        return 1.0 + np.abs(xi) ** self.weight_order

    def eta_bar(self, u) -> np.ndarray:
        """int_0^u eta, which equals int chi_u(xi) eta(xi) dxi."""
        u = np.asarray(u, dtype=float)
        if self.eta == EtaKind.IDENTITY:
            return u.copy()
        lo, hi = self.support()
        if self.eta == EtaKind.INDICATOR:
            return np.clip(u, lo, hi) - np.clip(0.0, lo, hi)

        def antiderivative(x):
            return self.radius * _BUMP_INTEGRAL(self._scaled(np.clip(x, lo, hi)))

        return antiderivative(u) - antiderivative(0.0)

    def theta_eta_density(self, xi) -> np.ndarray:
        """(xi^2 + 1) theta(xi)^2 (eta(xi) + |eta'(xi)|)."""
        xi = np.asarray(xi, dtype=float)
        return (xi ** 2 + 1.0) * self.theta(xi) ** 2 * (self.eta_values(xi) + np.abs(self.eta_prime(xi)))

    def theta_eta(self, u) -> np.ndarray:
        """Theta_eta(u) = int_0^u theta_eta_density, Theta_eta(0) = 0."""
        u = np.asarray(u, dtype=float)
        if self.eta == EtaKind.IDENTITY:
            return gauss_integral(self.theta_eta_density, u)
        # the density vanishes off the support, so integrate between clipped limits
        lo, hi = self.support()
        upper = np.clip(u, lo, hi)
        start = float(np.clip(0.0, lo, hi))
        total = gauss_integral(lambda z: self.theta_eta_density(z + start), upper - start)
        return total
