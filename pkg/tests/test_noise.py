"""
Tests for noise coefficient families, the Wiener path and the bound checks
"""

import math

import numpy as np
import pytest
from pydantic import ValidationError

from kspde.errors import BoundViolation, GridMismatch, HorizonExceeded
from kspde.field import Field, TorusGrid
from kspde.models import NoiseFamily
from kspde.noise import (
    AdditiveFamily,
    MultiplicativeDefaultFamily,
    NoiseFactory,
    NoiseModel,
    SineLinearFamily,
    WienerPath,
    apply_noise,
    member_seed,
    verify_bounds,
)


class TestNoiseFactory:
    """Test family creation."""

    def test_create_each_family(self):
        """Every enum value maps to its class."""
        assert isinstance(NoiseFactory.create_family(NoiseFamily.ADDITIVE), AdditiveFamily)
        assert isinstance(NoiseFactory.create_family("multiplicative-default"), MultiplicativeDefaultFamily)
        assert isinstance(NoiseFactory.create_family(NoiseFamily.SINE_LINEAR), SineLinearFamily)

    def test_unknown_family(self):
        """Unknown names are refused."""
        with pytest.raises(ValueError):
            NoiseFactory.create_family("brownian-sheet")

    def test_supported_families(self):
        """The listing matches the enum."""
        assert set(NoiseFactory.get_supported_families()) == {f.value for f in NoiseFamily}


class TestNoiseModel:
    """Test the noise model container and coefficient evaluation."""

    def test_alpha_length_checked(self):
        """alpha must have K entries."""
        with pytest.raises(ValidationError):
            NoiseModel(mode_count=2, alpha=[0.5])

    def test_alpha_positive(self):
        """alpha_k must be positive."""
        with pytest.raises(ValidationError):
            NoiseModel(mode_count=1, alpha=[0.0])

    def test_amplitude(self, default_noise):
        """D = sum alpha_k^2."""
        assert default_noise.amplitude == pytest.approx(0.5)

    def test_default_family_vanishes_at_zero(self, default_noise, grid_1d):
        """g_k(x, 0) = 0 for the multiplicative default."""
        u = Field.zeros(grid_1d)
        assert np.all(default_noise.coefficients_on(u) == 0.0)

    def test_apply_noise_value(self, cosine_field):
        """One mode: 0.5 cos(x)/2 tanh(cos x) times the increment."""
        model = NoiseModel(mode_count=1, alpha=[0.5])
        out = apply_noise(cosine_field, model, np.array([0.1]))
        x = cosine_field.grid.coordinates()[0]
        expected = 0.1 * 0.5 * np.cos(x) / 2.0 * np.tanh(np.cos(x))
        assert np.allclose(out.values, expected)

    def test_apply_noise_shape_mismatch(self, cosine_field, default_noise):
        """The increment vector must have K entries."""
        with pytest.raises(GridMismatch):
            apply_noise(cosine_field, default_noise, np.zeros(3))

    def test_deterministic_noise(self, cosine_field):
        """K = 0 contributes nothing."""
        out = apply_noise(cosine_field, NoiseModel.deterministic(), np.zeros(0))
        assert np.all(out.values == 0.0)


class TestVerifyBounds:
    """Test sampled bound verification."""

    def test_default_family_passes(self, default_noise, grid_1d):
        """The multiplicative default satisfies every bound."""
        report = verify_bounds(default_noise, grid_1d)
        assert report.passed
        assert report.total_ratio <= 1.0
        assert len(report.modes) == 2

    def test_additive_family_passes(self, grid_2d):
        """The weighted Fourier basis satisfies the bounds in N = 2."""
        model = NoiseModel(mode_count=4, alpha=[0.5] * 4, family=NoiseFamily.ADDITIVE)
        assert verify_bounds(model, grid_2d, xi_samples=21).passed

    def test_sine_linear_fails(self, grid_1d):
        """sin(k x) xi breaks the gradient bound and names the offenders."""
        model = NoiseModel(mode_count=2, alpha=[0.5, 0.5], family=NoiseFamily.SINE_LINEAR)
        report = verify_bounds(model, grid_1d)
        assert not report.passed
        assert report.offenders

    def test_strict_raises(self, grid_1d):
        """strict=True turns a failure into BoundViolation."""
        model = NoiseModel(mode_count=1, alpha=[0.5], family=NoiseFamily.SINE_LINEAR)
        with pytest.raises(BoundViolation):
            verify_bounds(model, grid_1d, strict=True)

    def test_deterministic_passes(self, grid_1d):
        """No modes, nothing to violate."""
        assert verify_bounds(NoiseModel(), grid_1d).passed


class TestWienerPath:
    """Test the counter-based Wiener increments."""

    def test_reproducible(self):
        """Same seed, same increments; order of sampling does not matter."""
        a = WienerPath(seed=42, dt=0.01, mode_count=3, horizon=20)
        b = WienerPath(seed=42, dt=0.01, mode_count=3, horizon=20)
        late = b.sample_increments(17)
        assert np.array_equal(a.increments(), b.increments())
        assert np.array_equal(a.sample_increments(17), late)

    def test_seeds_differ(self):
        """Different seeds give different increments."""
        a = WienerPath(seed=1, dt=0.01, mode_count=2, horizon=5).increments()
        b = WienerPath(seed=2, dt=0.01, mode_count=2, horizon=5).increments()
        assert not np.array_equal(a, b)

    def test_horizon(self):
        """Steps outside [0, horizon) are refused."""
        path = WienerPath(seed=0, dt=0.1, mode_count=1, horizon=4)
        with pytest.raises(HorizonExceeded):
            path.sample_increments(4)
        with pytest.raises(HorizonExceeded):
            path.sample_increments(-1)

    def test_values_start_at_zero(self):
        """B(0) = 0 and the path is the cumulative sum."""
        path = WienerPath(seed=3, dt=0.1, mode_count=2, horizon=6)
        values = path.values()
        assert values.shape == (7, 2)
        assert np.all(values[0] == 0.0)
        assert np.allclose(np.diff(values, axis=0), path.increments())

    def test_variance(self):
        """Increments have variance dt."""
        dt = 0.01
        increments = WienerPath(seed=5, dt=dt, mode_count=1, horizon=10000).increments()
        assert np.mean(increments ** 2) == pytest.approx(dt, rel=0.05)
        assert abs(np.mean(increments)) < 4 * math.sqrt(dt / 10000)

    def test_nonpositive_dt(self):
        """dt must be positive."""
        with pytest.raises(ValueError):
            WienerPath(seed=0, dt=0.0, mode_count=1, horizon=1)

    def test_member_seed(self):
        """Member keys are deterministic and distinct."""
        assert member_seed(7, 0) == member_seed(7, 0)
        keys = {member_seed(7, i) for i in range(16)}
        assert len(keys) == 16
        assert member_seed(7, 0) != member_seed(8, 0)
