"""
Tests for the splitting solver, initial data and the viscosity ladder
"""

import math

import numpy as np
import pytest

from kspde.config.manager import InitialDataConfig
from kspde.errors import CflViolation, StepCountMismatch
from kspde.field import Field, TorusGrid, l1_norm, l2_norm
from kspde.model import ModelSpec
from kspde.models import DiffusionScheme, FaceAverage, FluxScheme, InitialDataKind
from kspde.solver import (
    NORM_COLUMNS,
    CauchyReport,
    InitialDataFactory,
    Solver,
    SolverConfig,
    burgers_characteristics,
    diffusion_matrix,
    ladder_differences,
    smooth_initial_datum,
    solve,
    vanishing_viscosity_ladder,
)


class TestSolverConfig:
    """Test configuration helpers."""

    def test_step_count(self, burgers_config):
        """0.2 / 0.01 = 20 steps."""
        assert burgers_config.step_count == 20

    def test_step_count_mismatch(self, grid_1d):
        """Non-integer t_end / dt is refused."""
        config = SolverConfig(grid=grid_1d, dt=0.03, t_end=0.1)
        with pytest.raises(StepCountMismatch):
            config.step_count

    def test_with_model(self, burgers_config):
        """with_model copies and leaves the original alone."""
        viscous = burgers_config.with_model(viscosity=0.1)
        assert viscous.model.viscosity == 0.1
        assert burgers_config.model.viscosity == 0.0


class TestDeterministicSolver:
    """Test the deterministic part of the splitting."""

    def test_heat_equation(self, grid_1d, heat_spec, cosine_field):
        """Pure diffusion of cos x matches exp(-t) cos x."""
        config = SolverConfig(model=heat_spec, grid=grid_1d, dt=1e-3, t_end=0.5)
        traj = solve(config, cosine_field, seed=0)
        exact = cosine_field * math.exp(-0.5)
        assert l2_norm(traj.final - exact) < 1e-3

    def test_substeps_keep_constants(self, grid_1d, porous_spec):
        """Constants are fixed points of both substeps."""
        solver = Solver(SolverConfig(model=porous_spec.model_copy(update={"viscosity": 0.1}), grid=grid_1d))
        u = Field.constant(grid_1d, 0.3)
        assert np.allclose(solver.convection_substep(u, 1e-3).values, 0.3, atol=1e-15)
        assert np.allclose(solver.diffusion_substep(u, 1e-4).values, 0.3, atol=1e-15)

    def test_explicit_heat_step(self, grid_1d, heat_spec, cosine_field):
        """One explicit step on cos x decays the mode by exp(-dt) to O(dt^2 + dx^2)."""
        solver = Solver(SolverConfig(model=heat_spec, grid=grid_1d))
        stepped = solver.diffusion_substep(cosine_field, 1e-3)
        assert np.max(np.abs(stepped.values - math.exp(-1e-3) * cosine_field.values)) < 1e-6

    def test_convection_substep_monotone(self, grid_1d, burgers_spec):
        """Ordered inputs give ordered outputs."""
        solver = Solver(SolverConfig(model=burgers_spec, grid=grid_1d))
        lower = Field.from_function(grid_1d, np.sin)
        upper = Field.from_function(grid_1d, lambda x: np.sin(x) + 0.2 * (1.0 + np.cos(3 * x)))
        assert np.all(solver.convection_substep(lower, 1e-2).values <= solver.convection_substep(upper, 1e-2).values)

    def test_mass_conservation(self, burgers_config, grid_1d):
        """The conservative scheme keeps the mass to round-off."""
        u0 = Field.from_function(grid_1d, lambda x: np.cos(x) + 0.5)
        traj = solve(burgers_config, u0, seed=0)
        drift = traj.norms["mass"] - traj.norms["mass"].iloc[0]
        assert np.max(np.abs(drift)) <= 1e-12 * max(1.0, abs(u0.mass()))

    def test_recording(self, grid_1d, burgers_spec, cosine_field):
        """record_every thins snapshots and keeps the final state."""
        config = SolverConfig(model=burgers_spec, grid=grid_1d, dt=1e-2, t_end=0.2, record_every=5)
        traj = solve(config, cosine_field, seed=0)
        assert len(traj) == 5
        assert traj.times[-1] == pytest.approx(0.2)
        assert list(traj.norms.columns) == NORM_COLUMNS
        assert traj.initial is cosine_field

    def test_cfl_violation(self, grid_1d, burgers_spec, cosine_field):
        """A step above the convection limit is refused, not clipped."""
        config = SolverConfig(model=burgers_spec, grid=grid_1d, dt=0.1, t_end=0.2)
        with pytest.raises(CflViolation):
            solve(config, cosine_field, seed=0)

    def test_explicit_diffusion_cfl(self, grid_1d, porous_spec, cosine_field):
        """Explicit porous-medium diffusion at a large step is refused."""
        config = SolverConfig(model=porous_spec, grid=grid_1d, dt=5e-3, t_end=0.01)
        with pytest.raises(CflViolation):
            solve(config, cosine_field, seed=0)

    def test_semi_implicit_diffusion(self, grid_1d, porous_spec, cosine_field):
        """The semi-implicit scheme takes the same large step and keeps the mass."""
        config = SolverConfig(
            model=porous_spec,
            grid=grid_1d,
            dt=5e-3,
            t_end=0.1,
            diffusion_scheme=DiffusionScheme.SEMI_IMPLICIT,
        )
        traj = solve(config, cosine_field, seed=0)
        assert np.all(np.isfinite(traj.final.values))
        assert abs(traj.final.mass() - cosine_field.mass()) < 1e-10
        assert np.max(np.abs(traj.final.values)) <= 1.0 + 1e-12

    def test_comparison(self, burgers_config, grid_1d):
        """Ordered data stay ordered."""
        config = burgers_config
        low = Field.from_function(grid_1d, np.cos)
        high = low + 0.5
        a = solve(config, low, seed=0).final
        b = solve(config, high, seed=0).final
        assert np.min(b.values - a.values) >= -1e-12

    @pytest.mark.parametrize("scheme", list(FluxScheme))
    def test_maximum_principle(self, burgers_config, grid_1d, scheme):
        """Without noise the solution stays within the initial range."""
        u0 = Field.from_function(grid_1d, lambda x: np.sin(2 * x))
        traj = solve(burgers_config.model_copy(update={"flux_scheme": scheme}), u0, seed=0)
        assert traj.values().max() <= 1.0 + 1e-12
        assert traj.values().min() >= -1.0 - 1e-12

    def test_burgers_characteristics(self):
        """Before the shock the scheme follows the characteristics."""
        grid = TorusGrid(dim=1, points_per_dim=512)
        config = SolverConfig(model=ModelSpec(flux_exponent=2), grid=grid, dt=5e-3, t_end=0.5)
        u0 = Field.from_function(grid, np.sin)
        traj = solve(config, u0, seed=0)
        exact = Field(grid, burgers_characteristics(np.sin, grid.axis(), 0.5))
        assert l1_norm(traj.final - exact) / (2 * math.pi) < 2e-2

    def test_characteristics_refuse_shocks(self):
        """Crossing characteristics are reported."""
        with pytest.raises(ValueError):
            burgers_characteristics(np.sin, np.linspace(0, 2 * math.pi, 16), 1.5)


class TestStochasticSolver:
    """Test seeding of stochastic runs."""

    def test_seed_determinism(self, noisy_config, cosine_field):
        """(config, u0, seed) determines the trajectory bit for bit."""
        a = solve(noisy_config, cosine_field, seed=11)
        b = solve(noisy_config, cosine_field, seed=11)
        assert np.array_equal(a.values(), b.values())

    def test_seeds_give_different_paths(self, noisy_config, cosine_field):
        """Different seeds drive different noise."""
        a = solve(noisy_config, cosine_field, seed=11).final
        b = solve(noisy_config, cosine_field, seed=12).final
        assert not np.array_equal(a.values, b.values)


class TestDiffusionMatrix:
    """Test the semi-implicit system."""

    @pytest.mark.parametrize("rule", list(FaceAverage))
    def test_symmetric_with_unit_row_sums(self, porous_spec, rule):
        """I - dt div(a grad) is symmetric and conserves constants."""
        values = np.cos(np.linspace(0, 2 * math.pi, 32, endpoint=False))
        matrix = diffusion_matrix(porous_spec, values, 0.5, rule).toarray()
        assert np.allclose(matrix, matrix.T)
        assert np.allclose(matrix.sum(axis=1), 1.0)


class TestInitialData:
    """Test initial data creation and mollification."""

    def test_canned_shapes(self, grid_1d):
        """Riemann data jump at the given position."""
        u0 = InitialDataFactory.create_initial_data(
            grid_1d, InitialDataConfig(kind=InitialDataKind.RIEMANN, left=1.0, right=0.0)
        )
        x = grid_1d.axis()
        assert np.all(u0.values[x < math.pi] == 1.0)
        assert np.all(u0.values[x >= math.pi] == 0.0)

    def test_white_noise_seeded(self, grid_1d):
        """White-noise data depend only on their seed and respect the clip."""
        config = InitialDataConfig(kind=InitialDataKind.WHITE_NOISE, amplitude=2.0, clip=1.0, seed=7)
        a = InitialDataFactory.create_initial_data(grid_1d, config)
        b = InitialDataFactory.create_initial_data(grid_1d, config)
        assert np.array_equal(a.values, b.values)
        assert np.max(np.abs(a.values)) <= 1.0

    def test_supported_kinds(self):
        """The listing matches the enum."""
        assert set(InitialDataFactory.get_supported_kinds()) == {k.value for k in InitialDataKind}

    def test_fejer_smoothing(self, cosine_field):
        """kappa = 0.5 gives cutoff 2 and scales cos x by 2/3."""
        smooth = smooth_initial_datum(cosine_field, 0.5)
        assert np.allclose(smooth.values, 2.0 / 3.0 * cosine_field.values)

    def test_smoothing_keeps_range(self, grid_1d):
        """The positive Fejer kernel creates no new extrema."""
        config = InitialDataConfig(kind=InitialDataKind.WHITE_NOISE, amplitude=1.0, clip=1.0, seed=3)
        u0 = InitialDataFactory.create_initial_data(grid_1d, config)
        smooth = smooth_initial_datum(u0, 0.1)
        assert smooth.values.max() <= u0.values.max() + 1e-12
        assert smooth.values.min() >= u0.values.min() - 1e-12

    def test_smoothing_needs_positive_kappa(self, cosine_field):
        """kappa = 0 has no mollification."""
        with pytest.raises(ValueError):
            smooth_initial_datum(cosine_field, 0.0)


class TestViscosityLadder:
    """Test the vanishing-viscosity ladder."""

    def test_ladder_order(self, burgers_config, cosine_field):
        """The kappa list must decrease strictly."""
        with pytest.raises(ValueError):
            ladder_differences(burgers_config, cosine_field, 0, [0.1, 0.1, 0.05])
        with pytest.raises(ValueError):
            ladder_differences(burgers_config, cosine_field, 0, [0.1])

    def test_ladder_differences(self, grid_1d, burgers_spec, cosine_field):
        """Consecutive differences are positive and shrink."""
        config = SolverConfig(model=burgers_spec, grid=grid_1d, dt=5e-3, t_end=0.1)
        diffs = ladder_differences(config, cosine_field, 0, [0.1, 0.05, 0.025])
        assert diffs.shape == (2,)
        assert np.all(diffs > 0)
        assert diffs[1] <= 1.1 * diffs[0]

    def test_ladder_report(self, grid_1d, burgers_spec, cosine_field):
        """Deterministic members agree, so the spread is zero."""
        config = SolverConfig(model=burgers_spec, grid=grid_1d, dt=5e-3, t_end=0.1)
        report = vanishing_viscosity_ladder(config, cosine_field, 0, [0.1, 0.05, 0.025], members=2)
        assert report.members == 2
        assert len(report.differences) == 2
        assert report.stderr == pytest.approx([0.0, 0.0], abs=1e-15)

    def test_ladder_grid_independent(self, burgers_spec):
        """Halving h moves each ladder difference by less than 30%."""
        diffs = []
        for points in (64, 128):
            grid = TorusGrid(dim=1, points_per_dim=points)
            config = SolverConfig(model=burgers_spec, grid=grid, dt=2e-3, t_end=0.1)
            diffs.append(ladder_differences(config, Field.from_function(grid, np.cos), 0, [0.2, 0.1, 0.05]))
        coarse, fine = diffs
        assert np.all(coarse > 0)
        assert np.all(np.abs(fine - coarse) < 0.3 * coarse)

    def test_noisy_ladder_report(self, noisy_config, cosine_field):
        """Independent noise paths spread the differences."""
        report = vanishing_viscosity_ladder(noisy_config, cosine_field, 5, [0.05, 0.025, 0.0125], members=3)
        assert report.members == 3
        assert len(report.differences) == len(report.stderr) == 2
        assert np.all(np.array(report.differences) > 0)
        assert np.all(np.array(report.stderr) > 0)
        assert np.all(np.isfinite(report.stderr))

    def test_cauchy_report(self):
        """Aggregation over members and the 10% slack."""
        good = CauchyReport.from_member_differences([0.4, 0.2, 0.1], np.array([[2.0, 1.0], [2.0, 1.0]]))
        assert good.passed
        assert good.differences == [2.0, 1.0]
        assert good.stderr == [0.0, 0.0]
        bad = CauchyReport.from_member_differences([0.4, 0.2, 0.1], np.array([[1.0, 2.0]]))
        assert not bad.passed
        assert bad.members == 1
