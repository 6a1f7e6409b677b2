"""
Test configuration and fixtures for kspde
"""

import sys
from pathlib import Path

import numpy as np
import pytest

# Add the package root to the path
sys.path.insert(0, str(Path(__file__).parent.parent))

from kspde.field import Field, TorusGrid
from kspde.harness.pool import EnsemblePool
from kspde.model import Localization, ModelSpec
from kspde.noise import NoiseModel
from kspde.solver import SolverConfig


@pytest.fixture
def grid_1d():
    """128-point grid on the circle."""
    return TorusGrid(dim=1, points_per_dim=128)


@pytest.fixture
def grid_2d():
    """32 x 32 grid on the two-torus."""
    return TorusGrid(dim=2, points_per_dim=32)


@pytest.fixture
def cosine_field(grid_1d):
    """u0 = cos x."""
    return Field.from_function(grid_1d, np.cos)


@pytest.fixture
def random_field(grid_1d):
    """Seeded standard normal field."""
    generator = np.random.Generator(np.random.Philox(key=1234))
    return Field(grid_1d, generator.standard_normal(grid_1d.shape))


@pytest.fixture
def burgers_spec():
    """B(xi) = xi^2/2, no diffusion."""
    return ModelSpec(flux_exponent=2)


@pytest.fixture
def porous_spec():
    """Burgers flux with A(xi) = |xi|^2."""
    return ModelSpec(flux_exponent=2, diffusion_exponent=3)


@pytest.fixture
def heat_spec():
    """Pure heat flow with unit viscosity."""
    return ModelSpec(flux_exponent=None, viscosity=1.0)


@pytest.fixture
def bump_localization():
    """Polynomial bump on [-1, 1], theta = 1."""
    return Localization(center=0.0, radius=1.0)


@pytest.fixture
def default_noise():
    """Two-mode multiplicative default noise."""
    return NoiseModel(mode_count=2, alpha=[0.5, 0.5])


@pytest.fixture
def burgers_config(grid_1d, burgers_spec):
    """Deterministic Burgers run to t = 0.2."""
    return SolverConfig(model=burgers_spec, grid=grid_1d, dt=1e-2, t_end=0.2)


@pytest.fixture
def noisy_config(grid_1d, burgers_spec, default_noise):
    """Stochastic Burgers run to t = 0.2."""
    return SolverConfig(model=burgers_spec, noise=default_noise, grid=grid_1d, dt=1e-2, t_end=0.2)


@pytest.fixture
def serial_pool():
    """Single-worker ensemble pool."""
    return EnsemblePool(max_workers=1)
