"""
Lie splitting for

    du + div(B^tau(u)) dt = div(A^{kappa,tau}(u) grad u) dt + Phi(u) dW

on the torus. One step applies, in this order, the monotone convection
update, the diffusion update and the Euler-Maruyama noise increment
evaluated on the post-deterministic state.
"""

import logging
import math
from dataclasses import dataclass, field
from typing import List

import numpy as np
import pandas as pd

from kspde.errors import CflViolation, NonFinite
from kspde.field import Field, l1_norm, l2_norm, lp_norm
from kspde.models import DiffusionScheme
from kspde.noise import WienerPath, apply_noise
from kspde.solver.config import SolverConfig
from kspde.solver.operators import (
    central_gradient_squared,
    convection_update,
    explicit_diffusion_update,
    implicit_diffusion_update,
    value_range,
)

logger = logging.getLogger(__name__)

NORM_COLUMNS = ["t", "L1", "L2", "Lp", "mass"]


@dataclass(frozen=True, eq=False)
class Trajectory:
    """Recorded states of one run; states[i] lives at times[i]."""

    config: SolverConfig
    seed: int
    dt: float
    record_every: int
    times: np.ndarray
    states: List[Field]
    norms: pd.DataFrame
    dissipation: np.ndarray = field(default_factory=lambda: np.zeros(0))

    @property
    def initial(self) -> Field:
        return self.states[0]

    @property
    def final(self) -> Field:
        return self.states[-1]

    def values(self) -> np.ndarray:
        """States stacked along a leading time axis."""
        return np.stack([state.values for state in self.states])

    def __len__(self) -> int:
        return len(self.states)


class Solver:
    """Time stepper for one SolverConfig."""

    def __init__(self, config: SolverConfig):
        self.config = config
        self.grid = config.grid
        self.spec = config.model
        self.directions = self.spec.direction(self.grid.dim)

    # -- stability limits ---------------------------------------------------

    def convection_dt_limit(self, values: np.ndarray) -> float:
        lo, hi = value_range(values)
        speed = float(np.sum(np.abs(self.directions))) * self.spec.max_speed(lo, hi)
        if speed == 0.0:
            return math.inf
        return self.config.cfl_safety * self.grid.spacing / speed

    def diffusion_dt_limit(self, values: np.ndarray) -> float:
        lo, hi = value_range(values)
        peak = self.spec.max_diffusion(lo, hi)
        if peak == 0.0:
            return math.inf
        return self.config.cfl_safety * self.grid.spacing ** 2 / (2.0 * self.grid.dim * peak)

    @property
    def diffusion_active(self) -> bool:
        return self.spec.diffusion_on or self.spec.viscosity > 0

    # -- substeps -----------------------------------------------------------

    def convection_substep(self, u: Field, dt: float) -> Field:
        if not self.spec.flux_on:
            return u
        admissible = self.convection_dt_limit(u.values)
        if dt > admissible:
            raise CflViolation(f"Convection step dt={dt:.6g} is unstable", admissible)
        lo, hi = value_range(u.values)
        speed = self.spec.max_speed(lo, hi)
        values = convection_update(
            self.spec, u.values, dt / self.grid.spacing, self.directions, self.config.flux_scheme, speed
        )
        return Field(u.grid, values)

    def diffusion_substep(self, u: Field, dt: float) -> Field:
        if not self.diffusion_active:
            return u
        ratio = dt / self.grid.spacing ** 2
        if self.config.diffusion_scheme == DiffusionScheme.EXPLICIT:
            admissible = self.diffusion_dt_limit(u.values)
            if dt > admissible:
                raise CflViolation(f"Explicit diffusion step dt={dt:.6g} is unstable", admissible)
            values = explicit_diffusion_update(self.spec, u.values, ratio, self.config.face_average)
        else:
            values = implicit_diffusion_update(self.spec, u.values, ratio, self.config.face_average)
        return Field(u.grid, values)

    def noise_substep(self, u: Field, increments: np.ndarray) -> Field:
        if self.config.noise.mode_count == 0:
            return u
        return u + apply_noise(u, self.config.noise, increments)

    def deterministic_step(self, u: Field, dt: float) -> Field:
        return self.diffusion_substep(self.convection_substep(u, dt), dt)

    def step(self, u: Field, path: WienerPath, step_index: int) -> Field:
        dt = self.config.dt
        try:
            u = self.deterministic_step(u, dt)
            u = self.noise_substep(u, path.sample_increments(step_index))
        except NonFinite as exc:
            raise NonFinite(f"Non-finite state at step {step_index}") from exc
        return u

    # -- diagnostics --------------------------------------------------------

    def parabolic_energy(self, u: Field) -> float:
        """h^N sum |grad_h Psi(u)|^2, the rate of parabolic dissipation."""
        if not self.diffusion_active:
            return 0.0
        density = central_gradient_squared(self.spec.psi(u.values), self.grid.spacing)
        return float(density.sum() * self.grid.cell_volume)

    def norm_row(self, t: float, u: Field) -> dict:
        return {
            "t": t,
            "L1": l1_norm(u),
            "L2": l2_norm(u),
            "Lp": lp_norm(u, self.config.norm_exponent),
            "mass": u.mass(),
        }

    # -- driver -------------------------------------------------------------

    def solve(self, u0: Field, seed: int) -> Trajectory:
        self.grid.ensure_same(u0.grid)
        steps = self.config.step_count
        dt = self.config.dt
        every = self.config.record_every
        path = WienerPath(seed=seed, dt=dt, mode_count=self.config.noise.mode_count, horizon=steps)

        times, states, rows, energy = [0.0], [u0], [self.norm_row(0.0, u0)], [self.parabolic_energy(u0)]
        u = u0
        for s in range(steps):
            u = self.step(u, path, s)
            if (s + 1) % every == 0 or s + 1 == steps:
                t = (s + 1) * dt
                times.append(t)
                states.append(u)
                rows.append(self.norm_row(t, u))
                energy.append(self.parabolic_energy(u))

        logger.debug(f"Solved {steps} steps (seed {seed}), {len(states)} snapshots")
        return Trajectory(
            config=self.config,
            seed=seed,
            dt=dt,
            record_every=every,
            times=np.asarray(times),
            states=states,
            norms=pd.DataFrame(rows, columns=NORM_COLUMNS),
            dissipation=np.asarray(energy),
        )


def step(config: SolverConfig, u: Field, path: WienerPath, step_index: int) -> Field:
    return Solver(config).step(u, path, step_index)


def solve(config: SolverConfig, u0: Field, seed: int) -> Trajectory:
    """Run one trajectory; (config, u0, seed) determines it completely."""
    return Solver(config).solve(u0, seed)
