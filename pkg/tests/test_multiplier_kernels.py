"""
Tests for smoothstep bumps, dyadic partitions and discrete multiplier kernels
"""

import numpy as np
import pytest

from kspde.field import TorusGrid
from kspde.multiplier_kernels import (
    BumpSpec,
    SmoothstepOrder,
    SymbolPartition,
    dyadic_levels,
    dyadic_symbol_split,
    kernel_l1_norm,
    partition_weights,
    psi0,
    psi1,
    psi_tilde,
    smoothstep,
    spacetime_forward,
    spacetime_inverse,
    symbol_magnitude,
    zeta,
)


class TestBumps:
    """Test the smoothstep family and the bumps built from it."""

    @pytest.mark.parametrize("order", list(SmoothstepOrder))
    def test_smoothstep_ends_and_symmetry(self, order):
        """0 -> 1 monotone, with s(t) + s(1 - t) = 1."""
        t = np.linspace(0.0, 1.0, 101)
        s = smoothstep(t, order)
        assert s[0] == 0.0 and s[-1] == pytest.approx(1.0)
        assert np.all(np.diff(s) >= 0)
        assert np.allclose(s + smoothstep(1.0 - t, order), 1.0)

    def test_smoothstep_clips(self):
        """Arguments outside [0, 1] saturate."""
        assert np.allclose(smoothstep([-1.0, 2.0]), [0.0, 1.0])

    def test_zeta_plateau(self):
        """zeta is 1 on r <= 1 and 0 on r >= 2."""
        assert np.allclose(zeta([0.0, 0.5, 1.0]), 1.0)
        assert np.allclose(zeta([2.0, 3.0]), 0.0)

    def test_annulus_support(self):
        """psi_1 vanishes off 1/2 <= |z| <= 2 and psi_0 off |z| <= 1."""
        assert np.allclose(psi1([0.0, 0.4, 2.5]), 0.0)
        assert psi1(1.0) == pytest.approx(1.0)
        assert np.allclose(psi0([1.0, 1.5]), 0.0)
        assert psi0(0.5) == pytest.approx(1.0)

    def test_psi_tilde(self):
        """psi_1(z)/z is finite and matches the quotient away from zero."""
        assert psi_tilde(0.0) == 0.0
        assert psi_tilde(1.5) == pytest.approx(psi1(1.5) / 1.5)

    def test_bump_spec(self):
        """BumpSpec rescales zeta around its centre."""
        bump = BumpSpec(center=1.0, radius=0.5)
        assert bump(1.25) == pytest.approx(1.0)
        assert bump(2.5) == 0.0
        assert bump.support_radius == 1.0
        assert BumpSpec(annulus=True)(1.0) == pytest.approx(1.0)


class TestPartition:
    """Test dyadic partitions of unity."""

    def test_dyadic_levels(self):
        """Levels double until the maximum is covered."""
        assert dyadic_levels(5.0) == [1, 2, 4, 8]
        assert dyadic_levels(0.3) == [1]

    def test_partition_of_unity(self):
        """psi_0 + sum psi_1(./K) = 1 up to the top level."""
        z = np.linspace(0.0, 16.0, 1601)
        weights = partition_weights(z, dyadic_levels(16.0))
        assert np.allclose(sum(weights.values()), 1.0)

    def test_symbol_partition(self):
        """SymbolPartition covers every sampled magnitude."""
        magnitude = np.abs(np.random.default_rng(0).normal(size=(8, 8))) * 10
        partition = SymbolPartition.build(magnitude, delta=0.5)
        assert np.allclose(partition.total(), 1.0)


class TestKernels:
    """Test transforms and kernel norms."""

    def test_identity_kernel(self):
        """The constant multiplier 1 has the Dirac kernel."""
        assert kernel_l1_norm(np.ones(64)) == pytest.approx(1.0)

    def test_low_pass_kernel(self):
        """The multiplier 1_{n = 0} averages, so its kernel also has norm 1."""
        multiplier = np.zeros(64)
        multiplier[32] = 1.0
        assert kernel_l1_norm(multiplier) == pytest.approx(1.0)

    def test_spacetime_round_trip(self):
        """Transforms act on every axis but the last."""
        g = np.random.default_rng(1).normal(size=(8, 16, 3))
        assert np.allclose(spacetime_inverse(spacetime_forward(g)).real, g)

    def test_symbol_magnitude_shape(self, burgers_spec):
        """One magnitude per (u, n, xi)."""
        grid = TorusGrid(dim=1, points_per_dim=16)
        xi = np.linspace(-1.0, 1.0, 5)
        magnitude = symbol_magnitude(burgers_spec, 8, 0.1, grid, xi)
        assert magnitude.shape == (8, 16, 5)
        assert magnitude[0, 0].max() == 0.0

    def test_dyadic_split_sums_back(self, porous_spec):
        """The symbol-level components add up to the input."""
        grid = TorusGrid(dim=1, points_per_dim=16)
        xi = np.linspace(-1.0, 1.0, 5)
        g = np.random.default_rng(2).normal(size=(8, 16, 5))
        parts = dyadic_symbol_split(g, porous_spec, 0.5, 0.1, grid, xi)
        assert 0 in parts
        assert np.allclose(sum(parts.values()), g, atol=1e-10)
