"""
Canned experiments, one per acceptance check.
"""

from .base import Experiment
from .factory import ALIASES, EXPERIMENTS, ExperimentFactory

__all__ = ["ALIASES", "EXPERIMENTS", "Experiment", "ExperimentFactory"]
