from typing import Dict, List, Type

from kspde.errors import UnknownExperiment
from kspde.harness.experiments.base import Experiment
from kspde.harness.experiments.deterministic import (
    BurgersShockExperiment,
    ComparisonExperiment,
    HeatExactExperiment,
    StructuralInvariantsExperiment,
)
from kspde.harness.experiments.regularity import (
    MultiplierUniformityExperiment,
    NondegeneracyFitExperiment,
    RegularityBurgersExperiment,
    RegularityPorousExperiment,
)
from kspde.harness.experiments.stochastic import (
    ContractionExperiment,
    LpMomentsExperiment,
    MeasureDecayExperiment,
    VanishingViscosityExperiment,
)

EXPERIMENTS: Dict[str, Type[Experiment]] = {
    cls.name: cls
    for cls in (
        HeatExactExperiment,
        BurgersShockExperiment,
        ComparisonExperiment,
        ContractionExperiment,
        LpMomentsExperiment,
        MeasureDecayExperiment,
        VanishingViscosityExperiment,
        NondegeneracyFitExperiment,
        RegularityBurgersExperiment,
        RegularityPorousExperiment,
        MultiplierUniformityExperiment,
        StructuralInvariantsExperiment,
    )
}

ALIASES = {"contraction": "contraction-coupled"}


class ExperimentFactory:
    """Factory class for creating canned experiments."""

    @staticmethod
    def canonical_name(name: str) -> str:
        return ALIASES.get(name, name)

    @staticmethod
    def create_experiment(name: str) -> Experiment:
        """
        Create and return the experiment registered under ``name``.

        Args:
            name: Experiment name or alias

        Returns:
            Experiment instance
        """
        canonical = ExperimentFactory.canonical_name(name)
        if canonical not in EXPERIMENTS:
            raise UnknownExperiment(f"Unsupported experiment: {name}")
        return EXPERIMENTS[canonical]()

    @staticmethod
    def get_supported_experiments() -> List[str]:
        """Get list of supported experiment names."""
        return list(EXPERIMENTS)
