"""
Kinetic-formulation diagnostics: kinetic and chi functions, kinetic measure
histograms, cutoff families and large-xi decay checks.
"""

from .accumulate import (
    accumulate_entropy_defect,
    accumulate_parabolic_dissipation,
    ito_correction,
    signed_measure,
)
from .cutoffs import SMOOTHSTEP_SLOPE, CutoffFamily, cutoff_eval, plateau, smoothstep
from .decay import (
    BandReport,
    DecayReport,
    TailReport,
    band_mass_growth,
    initial_tail_profile,
    measure_decay_profile,
    tail_domination_check,
)
from .functions import chain_rule_residual, chi_function, kinetic_average, kinetic_function, layer_cake
from .histogram import KineticMeasureHistogram, ensemble_mean
from .xi_grid import XiGrid

__all__ = [
    "BandReport",
    "CutoffFamily",
    "DecayReport",
    "KineticMeasureHistogram",
    "SMOOTHSTEP_SLOPE",
    "TailReport",
    "XiGrid",
    "accumulate_entropy_defect",
    "accumulate_parabolic_dissipation",
    "band_mass_growth",
    "chain_rule_residual",
    "chi_function",
    "cutoff_eval",
    "ensemble_mean",
    "initial_tail_profile",
    "ito_correction",
    "kinetic_average",
    "kinetic_function",
    "layer_cake",
    "measure_decay_profile",
    "plateau",
    "signed_measure",
    "smoothstep",
    "tail_domination_check",
]
