"""
Run records returned by the experiment runner.
"""

from typing import List

from pydantic import BaseModel, Field

from kspde.models import Verdict


class RunRecord(BaseModel):
    """Provenance and outcome of one experiment run."""
    name: str = Field(..., description="Experiment name")
    config_hash: str = Field(..., description="SHA-256 of the canonical configuration")
    seeds: List[int] = Field(default_factory=list, description="Ensemble member seeds in member order")
    wall_clock: float = Field(0.0, ge=0.0, description="Elapsed seconds")
    outputs: List[str] = Field(default_factory=list, description="Paths of every file written")
    verdicts: List[Verdict] = Field(default_factory=list, description="Check outcomes")

    @property
    def passed(self) -> bool:
        return all(v.passed for v in self.verdicts)

    def numerics(self) -> dict:
        """The reproducible part of the record (everything except timing and paths)."""
        return self.model_dump(mode="json", exclude={"wall_clock", "outputs"})
