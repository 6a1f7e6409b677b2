"""
Estimators over trajectories and ensembles.
"""

from .contraction import HalvingReport, contraction_gap, dt_halving_check
from .ensemble import ACCEPTANCE_MEMBERS, EnsembleResult
from .littlewood_paley import block_energy_fractions, block_norms, block_weights, littlewood_paley_blocks
from .moments import LpMomentReport, MomentLevel, additive_second_moment, lp_moment_check, sup_moment
from .multiplier_lab import (
    TruncationProbeReport,
    averaged_multiplier_apply,
    hann_window,
    lattice_symbol_magnitude,
    multiplier_l2_sides,
    sup_sublevel_measure,
    truncation_property_probe,
)
from .regularity import RegularityReport, regularity_exponent_fit, weighted_measure_mass
from .sobolev import fractional_sobolev_seminorm

__all__ = [
    "ACCEPTANCE_MEMBERS",
    "EnsembleResult",
    "HalvingReport",
    "LpMomentReport",
    "MomentLevel",
    "RegularityReport",
    "TruncationProbeReport",
    "additive_second_moment",
    "averaged_multiplier_apply",
    "block_energy_fractions",
    "block_norms",
    "block_weights",
    "contraction_gap",
    "dt_halving_check",
    "fractional_sobolev_seminorm",
    "hann_window",
    "lattice_symbol_magnitude",
    "littlewood_paley_blocks",
    "lp_moment_check",
    "multiplier_l2_sides",
    "regularity_exponent_fit",
    "sup_moment",
    "sup_sublevel_measure",
    "truncation_property_probe",
    "weighted_measure_mass",
]
