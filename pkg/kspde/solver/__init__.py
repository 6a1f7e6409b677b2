"""
Operator-splitting solver and the vanishing-viscosity ladder.
"""

from .config import SolverConfig
from .initial_data import InitialDataFactory, burgers_characteristics, fejer_weights, smooth_initial_datum
from .ladder import CauchyReport, ladder_differences, space_time_l1, vanishing_viscosity_ladder
from .operators import central_gradient_squared, convection_update, diffusion_matrix
from .scheme import NORM_COLUMNS, Solver, Trajectory, solve, step

__all__ = [
    "CauchyReport",
    "InitialDataFactory",
    "NORM_COLUMNS",
    "Solver",
    "SolverConfig",
    "Trajectory",
    "burgers_characteristics",
    "central_gradient_squared",
    "convection_update",
    "diffusion_matrix",
    "fejer_weights",
    "ladder_differences",
    "smooth_initial_datum",
    "solve",
    "space_time_l1",
    "step",
    "vanishing_viscosity_ladder",
]
