from typing import List

from kspde.models import NoiseFamily
from kspde.noise.families import (
    AdditiveFamily,
    CoefficientFamily,
    MultiplicativeDefaultFamily,
    SineLinearFamily,
)


class NoiseFactory:
    """Factory class for creating noise coefficient families."""

    @staticmethod
    def create_family(family: NoiseFamily) -> CoefficientFamily:
        """
        Create and return the coefficient family.

        Args:
            family: Family name

        Returns:
            CoefficientFamily instance
        """
        family = NoiseFamily(family)
        if family == NoiseFamily.ADDITIVE:
            return AdditiveFamily()
        elif family == NoiseFamily.MULTIPLICATIVE_DEFAULT:
            return MultiplicativeDefaultFamily()
        elif family == NoiseFamily.SINE_LINEAR:
            return SineLinearFamily()
        else:
            raise ValueError(f"Unsupported noise family: {family}")

    @staticmethod
    def get_supported_families() -> List[str]:
        """Get list of supported coefficient families."""
        return [family.value for family in NoiseFamily]
