"""
Nonlinearities, the kinetic symbol and the non-degeneracy analyzer.
"""

from .localization import Localization
from .nondegeneracy import (
    NondegeneracyFit,
    closed_form_exponents,
    fit_exponents,
    fit_power_law,
    hoelder_constant,
    predicted_regularity,
    required_integrability,
)
from .spec import ModelSpec, gauss_integral, regularized_sigma, truncated_flux_derivative
from .symbol import (
    default_xi_grid,
    frequency_shell,
    omega_measure,
    omega_table,
    symbol_derivative_ratio,
    symbol_eval,
)

__all__ = [
    "Localization",
    "ModelSpec",
    "NondegeneracyFit",
    "closed_form_exponents",
    "default_xi_grid",
    "fit_exponents",
    "fit_power_law",
    "frequency_shell",
    "gauss_integral",
    "hoelder_constant",
    "omega_measure",
    "omega_table",
    "predicted_regularity",
    "regularized_sigma",
    "required_integrability",
    "symbol_derivative_ratio",
    "symbol_eval",
    "truncated_flux_derivative",
]
