"""
Noise-free experiments: exact heat flow, the Burgers shock, the discrete
comparison principle and the structural invariants.
"""

import logging
import math
from typing import List

import numpy as np
import pandas as pd

from kspde.analysis import littlewood_paley_blocks
from kspde.config import ExperimentConfig, GridConfig, InitialDataConfig, ModelConfig, SolverBlockConfig
from kspde.field import Field, forward_transform, l2_norm, to_frame
from kspde.harness.experiments.base import Experiment
from kspde.harness.persistence import ReportWriter
from kspde.harness.pool import EnsemblePool
from kspde.kinetic import XiGrid, accumulate_entropy_defect, chain_rule_residual, layer_cake
from kspde.models import InitialDataKind, Verdict
from kspde.solver import solve

logger = logging.getLogger(__name__)


class HeatExactExperiment(Experiment):
    name = "heat-exact"
    summary = "Pure heat flow from a cosine against the exact exponential decay"

    def default_config(self) -> ExperimentConfig:
        return ExperimentConfig(
            name=self.name,
            grid=GridConfig(points=128),
            model=ModelConfig(flux_exponent=None, viscosity=1.0),
            solver=SolverBlockConfig(dt=1e-3, t_end=0.5, record_every=50),
            members=1,
        )

    def run(self, config: ExperimentConfig, pool: EnsemblePool, writer: ReportWriter) -> List[Verdict]:
        solver_config = self.solver_config(config)
        grid = solver_config.grid
        u0 = self.initial_datum(config, grid)
        trajectory = solve(solver_config, u0, config.seed)

        offset = config.initial_data.offset
        rate = config.model.viscosity * grid.dim * config.initial_data.frequency ** 2
        exact = (u0 - offset) * math.exp(-rate * solver_config.t_end) + offset
        error = l2_norm(trajectory.final - exact)

        profile = to_frame(trajectory.final)
        profile["exact"] = exact.values.ravel()
        writer.write_frame("profile", profile)
        writer.write_frame("norms", trajectory.norms)
        return [Verdict(name="heat-l2-error", passed=error < 1e-3, measured=error, bound=1e-3)]


def front_position(x: np.ndarray, values: np.ndarray, left: float, right: float, expected: float) -> float:
    """Interpolated crossing of (left + right)/2 in the direction left -> right nearest ``expected``."""
    mid = 0.5 * (left + right)
    following = np.roll(values, -1)
    sign = 1.0 if left > right else -1.0
    candidates = np.nonzero((sign * (values - mid) >= 0) & (sign * (following - mid) < 0))[0]
    if candidates.size == 0:
        raise ValueError("No front found in the profile")
    h = x[1] - x[0]
    positions = x[candidates] + h * (values[candidates] - mid) / (values[candidates] - following[candidates])
    return float(positions[np.argmin(np.abs(positions - expected))])


class BurgersShockExperiment(Experiment):
    name = "burgers-shock"
    summary = "Riemann data for Burgers: Rankine-Hugoniot shock speed and cell entropy inequalities"

    def default_config(self) -> ExperimentConfig:
        return ExperimentConfig(
            name=self.name,
            grid=GridConfig(points=512),
            model=ModelConfig(flux_exponent=2),
            initial_data=InitialDataConfig(kind=InitialDataKind.RIEMANN, left=1.0, right=0.0, position=math.pi),
            solver=SolverBlockConfig(dt=5e-3, t_end=1.0, record_every=1),
            members=1,
        )

    def run(self, config: ExperimentConfig, pool: EnsemblePool, writer: ReportWriter) -> List[Verdict]:
        solver_config = self.solver_config(config)
        grid = solver_config.grid
        data = config.initial_data
        trajectory = solve(solver_config, self.initial_datum(config, grid), config.seed)

        speed = 0.5 * (data.left + data.right)
        expected = (data.position + speed * solver_config.t_end) % (2.0 * math.pi)
        located = front_position(grid.axis(), trajectory.final.values, data.left, data.right, expected)
        offset = abs(located - expected)

        values = trajectory.values()
        xi = XiGrid.covering(float(values.min()), float(values.max()))
        defect = accumulate_entropy_defect(trajectory, xi)

        writer.write_frame("profile", to_frame(trajectory.final))
        writer.write_frame("entropy_defect", pd.DataFrame({"xi": xi.centers, "mass": defect.xi_marginal()}))
        return [
            Verdict(
                name="shock-position",
                passed=offset <= 2.0 * grid.spacing,
                measured=located,
                bound=expected,
                detail=f"|error| = {offset:.3e}, tolerance 2 dx = {2.0 * grid.spacing:.3e}",
            ),
            Verdict(
                name="cell-entropy-inequality",
                passed=defect.clipped_loss <= grid.spacing,
                measured=defect.clipped_loss,
                bound=grid.spacing,
                detail=f"retained defect mass {defect.total():.6g}",
            ),
        ]


class ComparisonExperiment(Experiment):
    name = "comparison-deterministic"
    summary = "Ordered data stay ordered at every step over a grid of (kappa, tau)"

    def default_config(self) -> ExperimentConfig:
        return ExperimentConfig(
            name=self.name,
            grid=GridConfig(points=64),
            model=ModelConfig(flux_exponent=2, diffusion_exponent=3),
            initial_data=InitialDataConfig(kind=InitialDataKind.COSINE, offset=0.5),
            solver=SolverBlockConfig(dt=1e-3, t_end=0.2, record_every=1),
            members=1,
            parameters={"kappas": [0.0, 0.05, 0.2], "taus": [0.0, 0.4, 0.75], "gap": 0.5},
        )

    def run(self, config: ExperimentConfig, pool: EnsemblePool, writer: ReportWriter) -> List[Verdict]:
        base = self.solver_config(config)
        upper = self.initial_datum(config, base.grid)
        lower = upper - float(self.parameter(config, "gap", 0.5))

        rows, verdicts = [], []
        for kappa in self.parameter(config, "kappas", [0.0, 0.05, 0.2]):
            for tau in self.parameter(config, "taus", [0.0, 0.4, 0.75]):
                solver_config = base.with_model(viscosity=float(kappa), truncation=float(tau))
                high = solve(solver_config, upper, config.seed)
                low = solve(solver_config, lower, config.seed)
                margin = float(np.min(high.values() - low.values()))
                rows.append({"kappa": kappa, "tau": tau, "margin": margin})
                verdicts.append(
                    Verdict(name=f"comparison-kappa{kappa}-tau{tau}", passed=margin >= 0.0, measured=margin, bound=0.0)
                )
        writer.write_frame("comparison", pd.DataFrame(rows))
        return verdicts


class StructuralInvariantsExperiment(Experiment):
    name = "structural-invariants"
    summary = "Mass conservation, Plancherel, Littlewood-Paley reconstruction, layer cake and chain rule"

    def default_config(self) -> ExperimentConfig:
        return ExperimentConfig(
            name=self.name,
            grid=GridConfig(points=64),
            model=ModelConfig(flux_exponent=2, diffusion_exponent=3),
            solver=SolverBlockConfig(dt=1e-3, t_end=0.1, record_every=1),
            members=1,
        )

    def run(self, config: ExperimentConfig, pool: EnsemblePool, writer: ReportWriter) -> List[Verdict]:
        solver_config = self.solver_config(config)
        grid = solver_config.grid
        u0 = self.initial_datum(config, grid)
        trajectory = solve(solver_config, u0, config.seed)

        mass = trajectory.norms["mass"].to_numpy()
        mass_drift = float(np.max(np.abs(np.diff(mass)))) if mass.size > 1 else 0.0
        mass_bound = 1e-12 * max(1.0, float(np.max(np.abs(mass))))

        generator = np.random.Generator(np.random.Philox(key=config.seed))
        sample = Field(grid, generator.standard_normal(grid.shape))
        energy = l2_norm(sample) ** 2
        plancherel = abs(forward_transform(sample).energy() - energy) / energy

        blocks = littlewood_paley_blocks(sample)
        reconstruction = float(np.max(np.abs(sum(b.values for b in blocks.values()) - sample.values)))

        xi = XiGrid.covering(float(u0.values.min()), float(u0.values.max()))
        layer_error = float(np.max(np.abs(layer_cake(u0, xi) - u0.values)))

        spec = solver_config.model
        chain = chain_rule_residual(u0, np.tanh, np.ones_like, spec.sigma)

        writer.write_frame("norms", trajectory.norms)
        return [
            Verdict(name="mass-conservation", passed=mass_drift <= mass_bound, measured=mass_drift, bound=mass_bound),
            Verdict(name="plancherel", passed=plancherel <= 1e-12, measured=plancherel, bound=1e-12),
            Verdict(
                name="littlewood-paley-reconstruction", passed=reconstruction <= 1e-10, measured=reconstruction, bound=1e-10
            ),
            Verdict(name="layer-cake", passed=layer_error <= xi.width, measured=layer_error, bound=xi.width),
            Verdict(name="chain-rule", passed=chain <= grid.spacing, measured=chain, bound=grid.spacing),
        ]
