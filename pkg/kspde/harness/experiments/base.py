"""
Base class for canned experiments.
"""

import logging
from abc import ABC, abstractmethod
from typing import Any, List

from kspde.config import ExperimentConfig
from kspde.field import Field, TorusGrid
from kspde.harness.persistence import ReportWriter
from kspde.harness.pool import EnsemblePool
from kspde.model import Localization
from kspde.models import Verdict
from kspde.noise import member_seed
from kspde.solver import InitialDataFactory, SolverConfig, smooth_initial_datum

logger = logging.getLogger(__name__)


class Experiment(ABC):
    """Abstract base class for experiments run by the harness."""

    name: str = ""
    summary: str = ""

    @abstractmethod
    def default_config(self) -> ExperimentConfig:
        """Canonical configuration of the experiment."""
        pass

    @abstractmethod
    def run(self, config: ExperimentConfig, pool: EnsemblePool, writer: ReportWriter) -> List[Verdict]:
        """
        Execute the experiment and write its tables.

        Args:
            config: Validated configuration
            pool: Worker pool for ensemble members
            writer: Report writer for CSV/JSON outputs

        Returns:
            Verdicts of every check the experiment makes
        """
        pass

    def member_seeds(self, config: ExperimentConfig) -> List[int]:
        return [member_seed(config.seed, i) for i in range(config.members)]

    @staticmethod
    def solver_config(config: ExperimentConfig) -> SolverConfig:
        return SolverConfig.from_experiment(config)

    @staticmethod
    def initial_datum(config: ExperimentConfig, grid: TorusGrid) -> Field:
        u0 = InitialDataFactory.create_initial_data(grid, config.initial_data)
        if config.solver.smooth_initial and config.model.viscosity > 0:
            u0 = smooth_initial_datum(u0, config.model.viscosity)
        return u0

    @staticmethod
    def localization(config: ExperimentConfig, solver_config: SolverConfig) -> Localization:
        return Localization.from_config(config.localization, solver_config.model)

    @staticmethod
    def parameter(config: ExperimentConfig, key: str, default: Any) -> Any:
        return config.parameters.get(key, default)
