"""
Experiment harness: worker pool, persistence, canned experiments and the CLI.
"""

from .experiments import Experiment, ExperimentFactory
from .persistence import ReportWriter
from .pool import EnsemblePool
from .records import RunRecord
from .runner import list_experiments, resolve_config, run_experiment

__all__ = [
    "EnsemblePool",
    "Experiment",
    "ExperimentFactory",
    "ReportWriter",
    "RunRecord",
    "list_experiments",
    "resolve_config",
    "run_experiment",
]
