"""
Solver configuration.
"""

import math

from pydantic import BaseModel, ConfigDict, Field

from kspde.config.manager import ExperimentConfig
from kspde.errors import StepCountMismatch
from kspde.field import TorusGrid
from kspde.model import ModelSpec
from kspde.models import DiffusionScheme, FaceAverage, FluxScheme
from kspde.noise import NoiseModel


class SolverConfig(BaseModel):
    """Everything one trajectory needs apart from the initial datum and the seed."""

    model_config = ConfigDict(frozen=True)

    model: ModelSpec = Field(default_factory=ModelSpec, description="Nonlinearities and (kappa, tau)")
    noise: NoiseModel = Field(default_factory=NoiseModel, description="Noise model")
    grid: TorusGrid = Field(default_factory=TorusGrid, description="Spatial grid")
    dt: float = Field(1e-3, gt=0.0, description="Time step")
    t_end: float = Field(0.5, ge=0.0, description="Final time")
    cfl_safety: float = Field(0.9, gt=0.0, lt=1.0, description="Safety factor on both CFL limits")
    diffusion_scheme: DiffusionScheme = Field(DiffusionScheme.EXPLICIT, description="Diffusion time discretization")
    flux_scheme: FluxScheme = Field(FluxScheme.ENGQUIST_OSHER, description="Numerical flux")
    face_average: FaceAverage = Field(FaceAverage.INTEGRAL_MEAN, description="Face coefficient rule")
    record_every: int = Field(1, ge=1, description="Snapshot thinning")
    norm_exponent: float = Field(4.0, ge=1.0, description="p of the recorded L^p norm")

    @classmethod
    def from_experiment(cls, config: ExperimentConfig) -> "SolverConfig":
        solver = config.solver
        return cls(
            model=ModelSpec.from_config(config.model),
            noise=NoiseModel.from_config(config.noise),
            grid=TorusGrid(dim=config.grid.dim, points_per_dim=config.grid.points),
            dt=solver.dt,
            t_end=solver.t_end,
            cfl_safety=solver.cfl_safety,
            diffusion_scheme=solver.diffusion_scheme,
            flux_scheme=solver.flux_scheme,
            face_average=solver.face_average,
            record_every=solver.record_every,
            norm_exponent=solver.norm_exponent,
        )

    @property
    def step_count(self) -> int:
        """t_end / dt, refusing non-integer ratios."""
        steps = round(self.t_end / self.dt)
        if not math.isclose(steps * self.dt, self.t_end, rel_tol=1e-9, abs_tol=1e-12):
            raise StepCountMismatch(f"t_end={self.t_end} is not an integer multiple of dt={self.dt}")
        return int(steps)

    def with_model(self, **updates) -> "SolverConfig":
        """Copy with model fields replaced, e.g. with_model(viscosity=0.1)."""
        return self.model_copy(update={"model": self.model.model_copy(update=updates)})
