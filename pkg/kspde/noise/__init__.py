"""
Truncated cylindrical Wiener process and multiplicative noise coefficients.
"""

from .factory import NoiseFactory
from .families import AdditiveFamily, CoefficientFamily, MultiplicativeDefaultFamily, SineLinearFamily
from .model import BoundReport, ModeBounds, NoiseModel, apply_noise, verify_bounds
from .wiener import WienerPath, member_seed

__all__ = [
    "AdditiveFamily",
    "BoundReport",
    "CoefficientFamily",
    "ModeBounds",
    "MultiplicativeDefaultFamily",
    "NoiseFactory",
    "NoiseModel",
    "SineLinearFamily",
    "WienerPath",
    "apply_noise",
    "member_seed",
    "verify_bounds",
]
