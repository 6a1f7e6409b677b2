"""
Tests for model nonlinearities, localization, the kinetic symbol and the
non-degeneracy fit
"""

import math

import numpy as np
import pandas as pd
import pytest
from pydantic import ValidationError

from kspde.errors import DegenerateFit, EmptyFrequencyShell, InvalidModel
from kspde.model import (
    Localization,
    ModelSpec,
    closed_form_exponents,
    fit_exponents,
    fit_power_law,
    frequency_shell,
    hoelder_constant,
    omega_measure,
    predicted_regularity,
    regularized_sigma,
    required_integrability,
    symbol_derivative_ratio,
    symbol_eval,
    truncated_flux_derivative,
)
from kspde.models import EtaKind, SymbolComponent


class TestModelSpec:
    """Test flux and diffusion nonlinearities."""

    def test_invalid_exponents(self):
        """k < 2 and m <= 2 are refused."""
        with pytest.raises(ValidationError):
            ModelSpec(flux_exponent=1)
        with pytest.raises(ValidationError):
            ModelSpec(diffusion_exponent=2.0)

    def test_burgers_flux(self, burgers_spec):
        """B(xi) = xi^2/2 and b(xi) = xi."""
        xi = np.array([-2.0, 0.5, 3.0])
        assert np.allclose(burgers_spec.flux(xi), xi ** 2 / 2)
        assert np.allclose(burgers_spec.b(xi), xi)

    def test_flux_split_sums_to_flux(self):
        """The Engquist-Osher parts add up to B^tau for even and odd k."""
        xi = np.linspace(-3, 3, 61)
        for k in (2, 3, 4):
            spec = ModelSpec(flux_exponent=k, truncation=0.5)
            assert np.allclose(spec.flux_plus(xi) + spec.flux_minus(xi), spec.flux_tau(xi), atol=1e-12)
            assert np.all(np.diff(spec.flux_plus(xi)) >= -1e-12)
            assert np.all(np.diff(spec.flux_minus(xi)) <= 1e-12)

    def test_truncated_velocity(self):
        """Outside the radius b^tau continues linearly with slope b'(1/tau)."""
        spec = ModelSpec(flux_exponent=3, truncation=0.5)
        assert spec.b_tau(3.0) == pytest.approx(8.0)
        assert spec.b_tau(1.0) == pytest.approx(1.0)
        assert spec.b_tau_prime(10.0) == pytest.approx(4.0)

    def test_custom_flux(self):
        """A user velocity is integrated numerically."""
        spec = ModelSpec(flux_exponent=None, custom_b=np.cos)
        xi = np.array([0.3, 1.2])
        assert np.allclose(spec.flux(xi), np.sin(xi), atol=1e-12)

    def test_porous_primitives(self, porous_spec):
        """sigma = |xi|, Psi = sgn(u) u^2/2 and Phi = sgn(u) |u|^3/3."""
        u = np.array([-1.5, -0.2, 0.0, 0.7, 2.0])
        assert np.allclose(porous_spec.sigma(u), np.abs(u))
        assert np.allclose(porous_spec.psi(u), np.sign(u) * u ** 2 / 2)
        assert np.allclose(porous_spec.phi(u), np.sign(u) * np.abs(u) ** 3 / 3)

    def test_viscosity_regularization(self, porous_spec):
        """A^{kappa} = (sqrt(kappa) + sigma)^2."""
        spec = porous_spec.model_copy(update={"viscosity": 0.25})
        assert spec.diffusion_reg(1.0) == pytest.approx(2.25)
        assert spec.max_diffusion(-1.0, 1.0) == pytest.approx(2.25)

    def test_regularized_sigma(self, porous_spec):
        """sqrt(kappa) plus sigma clamped at 1/tau, continuous at the seam."""
        assert regularized_sigma(porous_spec, 0.0, 0.0, 2.0) == pytest.approx(2.0)
        assert regularized_sigma(porous_spec, 0.04, 0.5, 4.0) == pytest.approx(2.2)
        seam = regularized_sigma(porous_spec, 0.04, 0.5, np.array([2.0 - 1e-9, 2.0, 2.0 + 1e-9]))
        assert np.ptp(seam) < 1e-8
        assert np.all(regularized_sigma(porous_spec, 0.04, 0.5, np.linspace(-5, 5, 101)) >= 0.2)

    def test_truncated_flux_derivative(self):
        """b' is clamped at 1/tau and carried along the flux direction in 2D."""
        spec = ModelSpec(flux_exponent=3)
        xi = np.array([-10.0, 1.5, 10.0])
        assert np.allclose(truncated_flux_derivative(spec, 0.0, xi), 2 * xi)
        assert np.allclose(truncated_flux_derivative(spec, 0.25, xi), [-8.0, 3.0, 8.0])
        planar = truncated_flux_derivative(spec, 0.25, xi, dim=2)
        assert planar.shape == (3, 2)
        assert np.allclose(planar[:, 0], planar[:, 1])

    def test_weight_order_and_integrability(self, burgers_spec, porous_spec):
        """p = max(k, m) - 2 and the moment order is 2p + 3."""
        assert burgers_spec.weight_order() == 0.0
        assert required_integrability(burgers_spec) == 3.0
        assert required_integrability(porous_spec) == 5.0

    def test_hoelder_constant(self, porous_spec):
        """sigma(xi) = |xi| is 1-Lipschitz."""
        assert hoelder_constant(porous_spec, 2.0) == pytest.approx(1.0, rel=1e-6)

    def test_direction_mismatch(self):
        """A 2-vector direction cannot serve N = 1."""
        spec = ModelSpec(flux_direction=[1.0, 0.0])
        with pytest.raises(InvalidModel):
            spec.direction(1)


class TestLocalization:
    """Test eta, eta_bar and Theta_eta."""

    def test_bump_values(self, bump_localization):
        """eta(0) = 1 and eta vanishes outside [-1, 1]."""
        assert bump_localization.eta_values(0.0) == pytest.approx(1.0)
        assert bump_localization.eta_values(1.5) == 0.0

    def test_eta_bar_saturates(self, bump_localization):
        """eta_bar(u) = +-16/35 beyond the support."""
        assert bump_localization.eta_bar(2.0) == pytest.approx(16 / 35)
        assert bump_localization.eta_bar(-2.0) == pytest.approx(-16 / 35)
        assert bump_localization.eta_bar(0.0) == pytest.approx(0.0)

    def test_indicator_eta_bar(self):
        """The indicator of [-1, 1] gives clip(u, -1, 1)."""
        loc = Localization(eta=EtaKind.INDICATOR)
        assert np.allclose(loc.eta_bar(np.array([-3.0, 0.5, 2.0])), [-1.0, 0.5, 1.0])

    def test_theta_eta_monotone(self, bump_localization):
        """Theta_eta(0) = 0 and it increases."""
        u = np.linspace(0.0, 1.5, 31)
        values = bump_localization.theta_eta(u)
        assert values[0] == pytest.approx(0.0)
        assert np.all(np.diff(values) >= -1e-12)

    def test_weight(self):
        """theta(xi) = 1 + |xi|^p."""
        loc = Localization(weight_order=2.0)
        assert loc.theta(2.0) == pytest.approx(5.0)


class TestSymbol:
    """Test the kinetic symbol and its sublevel sets."""

    def test_symbol_value(self, porous_spec):
        """L(i, 2i, 0.5) = 1 + 2i for b = xi, A = xi^2."""
        assert complex(symbol_eval(porous_spec, 1.0, 2, 0.5)) == pytest.approx(1 + 2j)
        assert complex(symbol_eval(porous_spec, 1.0, 2, 0.5, SymbolComponent.PARABOLIC)) == pytest.approx(1.0)

    def test_shell_1d(self):
        """J = 4 gives n = 2..8."""
        shell = frequency_shell(4, 1)
        assert [int(n[0]) for n in shell] == list(range(2, 9))

    def test_shell_2d_dedup(self):
        """Symmetric lattice points collapse in N = 2."""
        shell = frequency_shell(2, 2)
        keys = {(float(n.sum()), float(n @ n)) for n in shell}
        assert len(keys) == len(shell)

    def test_empty_shell(self):
        """J = 0 has no lattice points."""
        with pytest.raises(EmptyFrequencyShell):
            frequency_shell(0, 1)

    def test_burgers_omega(self, burgers_spec, bump_localization):
        """For b = xi the sublevel set is |xi| <= delta/n, largest at n = J/2."""
        omega = omega_measure(burgers_spec, bump_localization, 4, 0.25)
        assert omega == pytest.approx(4 * 0.25 / 4, rel=1e-2)

    def test_derivative_ratio(self, burgers_spec, bump_localization):
        """|b' n| / J peaks at n = 2J."""
        assert symbol_derivative_ratio(burgers_spec, bump_localization, 4, 1.0) == pytest.approx(2.0)


class TestNondegeneracyFit:
    """Test exponent fitting and the regularity prediction."""

    def test_closed_forms(self):
        """(1/(k-1), 1) without diffusion and (1/(m-1), 2) with it."""
        assert closed_form_exponents(2, None) == (1.0, 1.0)
        assert closed_form_exponents(2, 3.0) == (0.5, 2.0)

    def test_predicted_regularity(self):
        """alpha = beta = 1 gives s = 1/18 and r = 5/3; the porous case s = 1/24."""
        s, theta, r = predicted_regularity(1.0, 1.0)
        assert s == pytest.approx(1 / 18)
        assert theta == pytest.approx(0.2)
        assert r == pytest.approx(5 / 3)
        assert predicted_regularity(0.5, 2.0)[0] == pytest.approx(1 / 24)

    def test_fit_synthetic_table(self):
        """An exact power law is recovered."""
        rows = [
            {"J": J, "delta": d, "omega": 3.0 * (d / J ** 1.5) ** 0.7}
            for J in (2, 4, 8)
            for d in (0.1, 0.2, 0.4)
        ]
        fit = fit_power_law(pd.DataFrame(rows))
        assert fit.alpha == pytest.approx(0.7)
        assert fit.beta == pytest.approx(1.5)
        assert fit.predicted_s == pytest.approx(0.95 * fit.s_bound)

    def test_fit_rank_deficient(self):
        """A single J cannot determine beta."""
        rows = [{"J": 4, "delta": d, "omega": d} for d in (0.1, 0.2, 0.4)]
        with pytest.raises(DegenerateFit):
            fit_power_law(pd.DataFrame(rows))

    def test_burgers_exponents(self, burgers_spec, bump_localization):
        """The brute-force fit for b = xi gives alpha = beta = 1."""
        fit, table = fit_exponents(burgers_spec, bump_localization, [2, 4, 8], [0.125, 0.25, 0.5])
        assert len(table) == 9
        assert fit.alpha == pytest.approx(1.0, rel=0.15)
        assert fit.beta == pytest.approx(1.0, rel=0.15)

    def test_porous_exponents(self, porous_spec, bump_localization):
        """The parabolic part of A = xi^2 gives alpha = 1/2, beta = 2."""
        fit, _ = fit_exponents(
            porous_spec, bump_localization, [2, 4, 8], [0.125, 0.25, 0.5], component=SymbolComponent.PARABOLIC
        )
        assert fit.alpha == pytest.approx(0.5, rel=0.15)
        assert fit.beta == pytest.approx(2.0, rel=0.15)

    def test_too_few_values(self, burgers_spec, bump_localization):
        """Fewer than three distinct J are refused."""
        with pytest.raises(DegenerateFit):
            fit_exponents(burgers_spec, bump_localization, [2, 4], [0.1, 0.2, 0.4])
