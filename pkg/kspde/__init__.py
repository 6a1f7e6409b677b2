"""
kspde: a numerical laboratory for degenerate parabolic-hyperbolic SPDEs with
multiplicative noise on the torus.
"""

__version__ = "0.1.0"
