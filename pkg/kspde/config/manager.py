"""
Configuration management for kspde experiments
"""

import hashlib
import json
import logging
import math
import os
import re
from pathlib import Path
from typing import Any, Dict, List, Optional

import yaml
from pydantic import BaseModel, Field, field_validator, model_validator

from kspde.models import (
    DiffusionScheme,
    EtaKind,
    FaceAverage,
    FluxScheme,
    InitialDataKind,
    NoiseFamily,
)

logger = logging.getLogger(__name__)


class GridConfig(BaseModel):
    """Torus discretization."""
    dim: int = Field(1, description="Spatial dimension N (1 or 2)")
    points: int = Field(128, description="Grid points per dimension (power of two)")


class ModelConfig(BaseModel):
    """Nonlinearities of the equation."""
    flux_exponent: Optional[int] = Field(2, description="k in B(xi)=xi^k/k; null switches the flux off")
    diffusion_exponent: Optional[float] = Field(None, description="m in A(xi)=|xi|^(m-1); null switches diffusion off")
    viscosity: float = Field(0.0, ge=0.0, description="Vanishing viscosity kappa")
    truncation: float = Field(0.0, ge=0.0, description="Truncation tau (0 disables)")
    flux_direction: Optional[List[float]] = Field(None, description="Flux direction vector in N=2")


class NoiseConfig(BaseModel):
    """Truncated cylindrical Wiener process."""
    K: int = Field(0, ge=0, description="Number of noise modes (0 = deterministic)")
    alpha: List[float] = Field(default_factory=list, description="Per-mode bounds alpha_k")
    family: NoiseFamily = Field(NoiseFamily.MULTIPLICATIVE_DEFAULT, description="Coefficient family")

    @model_validator(mode="after")
    def check_alpha_length(self) -> "NoiseConfig":
        if len(self.alpha) != self.K:
            raise ValueError(f"alpha has {len(self.alpha)} entries but K={self.K}")
        return self


class LocalizationConfig(BaseModel):
    """Velocity localization eta and weight theta."""
    eta: EtaKind = Field(EtaKind.BUMP, description="Shape of eta")
    center: float = Field(0.0, description="Centre of eta")
    radius: float = Field(1.0, gt=0.0, description="Half width of supp eta")
    weight_order: Optional[float] = Field(None, ge=0.0, description="Order p of theta(xi)=1+|xi|^p; null picks the model default")


class InitialDataConfig(BaseModel):
    """Initial datum description."""
    kind: InitialDataKind = Field(InitialDataKind.COSINE, description="Shape of u0")
    amplitude: float = Field(1.0, description="Amplitude")
    offset: float = Field(0.0, description="Constant added to the shape")
    frequency: int = Field(1, ge=0, description="Spatial frequency for cosine/sine data")
    left: float = Field(1.0, description="Left state for Riemann data")
    right: float = Field(0.0, description="Right state for Riemann data")
    position: float = Field(math.pi, description="Discontinuity location or bump centre")
    width: float = Field(1.0, gt=0.0, description="Bump half width")
    clip: float = Field(1.0, gt=0.0, description="Clip level for white-noise data")
    seed: int = Field(0, description="Seed for white-noise data")


class SolverBlockConfig(BaseModel):
    """Time stepping parameters."""
    dt: float = Field(1e-3, gt=0.0, description="Time step")
    t_end: float = Field(0.5, ge=0.0, description="Final time")
    cfl_safety: float = Field(0.9, gt=0.0, lt=1.0, description="Safety factor on CFL limits")
    diffusion_scheme: DiffusionScheme = Field(DiffusionScheme.EXPLICIT, description="Diffusion time discretization")
    flux_scheme: FluxScheme = Field(FluxScheme.ENGQUIST_OSHER, description="Numerical flux")
    face_average: FaceAverage = Field(FaceAverage.INTEGRAL_MEAN, description="Face coefficient rule")
    record_every: int = Field(1, ge=1, description="Record a snapshot every n steps")
    norm_exponent: float = Field(4.0, ge=1.0, description="p of the recorded L^p norm series")
    smooth_initial: bool = Field(False, description="Replace u0 by its kappa-mollified version")


class ExperimentConfig(BaseModel):
    """Complete description of one experiment run."""
    name: str = Field(..., description="Canned experiment name")
    grid: GridConfig = Field(default_factory=GridConfig, description="Grid")
    model: ModelConfig = Field(default_factory=ModelConfig, description="Model nonlinearities")
    noise: NoiseConfig = Field(default_factory=NoiseConfig, description="Noise")
    localization: LocalizationConfig = Field(default_factory=LocalizationConfig, description="Localization")
    initial_data: InitialDataConfig = Field(default_factory=InitialDataConfig, description="Initial datum")
    solver: SolverBlockConfig = Field(default_factory=SolverBlockConfig, description="Time stepping")
    members: int = Field(8, ge=1, description="Ensemble size M")
    seed: int = Field(0, ge=0, description="Seed base for the ensemble")
    output_dir: Optional[str] = Field(None, description="Report directory (defaults to settings.OUTPUT_DIR/<name>)")
    parameters: Dict[str, Any] = Field(default_factory=dict, description="Experiment-specific knobs")

    @field_validator("name")
    @classmethod
    def strip_name(cls, v: str) -> str:
        return v.strip()

    def config_hash(self) -> str:
        """SHA-256 of the canonical JSON form (output location excluded)."""
        payload = self.model_dump(mode="json", exclude={"output_dir"})
        canonical = json.dumps(payload, sort_keys=True, separators=(",", ":"))
        return hashlib.sha256(canonical.encode("utf-8")).hexdigest()


class ConfigManager:
    """Loads experiment configuration files (YAML or JSON)."""

    def __init__(self, config_path: str = "config/experiments.yaml"):
        self.config_path = Path(config_path)
        self.raw: Optional[Dict[str, Any]] = None

    def load_raw(self) -> Dict[str, Any]:
        """Load and environment-resolve the configuration file."""
        if not self.config_path.exists():
            raise FileNotFoundError(f"Configuration file not found: {self.config_path}")

        with open(self.config_path, "r", encoding="utf-8") as f:
            if self.config_path.suffix.lower() in [".yaml", ".yml"]:
                config_data = yaml.safe_load(f) or {}
            elif self.config_path.suffix.lower() == ".json":
                config_data = json.load(f)
            else:
                raise ValueError(f"Unsupported config file format: {self.config_path.suffix}")

        self.raw = self.resolve_environment_variables(config_data)
        return self.raw

    def load_experiment(self, name: Optional[str] = None) -> ExperimentConfig:
        """
        Build an ExperimentConfig from the file.

        A file may hold a single experiment, or an ``experiments`` mapping keyed
        by experiment name in which case ``name`` selects the entry.
        """
        data = self.raw if self.raw is not None else self.load_raw()

        if "experiments" in data:
            if name is None:
                raise ValueError(f"{self.config_path} holds several experiments; a name is required")
            entries = data["experiments"] or {}
            if name not in entries:
                raise KeyError(f"Experiment '{name}' not found in {self.config_path}")
            entry = dict(entries[name] or {})
            entry.setdefault("name", name)
        else:
            entry = dict(data)
            if name is not None:
                entry["name"] = name

        config = ExperimentConfig(**entry)
        logger.debug(f"Loaded config for {config.name} (hash {config.config_hash()[:12]})")
        return config

    def experiment_names(self) -> List[str]:
        """Names of experiments defined in a multi-experiment file."""
        data = self.raw if self.raw is not None else self.load_raw()
        return sorted((data.get("experiments") or {}).keys())

    @staticmethod
    def resolve_environment_variables(config_dict: Dict[str, Any]) -> Dict[str, Any]:
        """Resolve ${VAR} references in configuration values."""

        def replace_env_vars(obj):
            if isinstance(obj, str):
                pattern = r'\$\{([^}]+)\}'
                for match in re.findall(pattern, obj):
                    obj = obj.replace(f"${{{match}}}", os.getenv(match, ""))
                return obj
            elif isinstance(obj, dict):
                return {k: replace_env_vars(v) for k, v in obj.items()}
            elif isinstance(obj, list):
                return [replace_env_vars(item) for item in obj]
            return obj

        return replace_env_vars(config_dict)


def load_config_from_file(config_path: str, name: Optional[str] = None) -> ExperimentConfig:
    """Load one experiment configuration from a specific file."""
    return ConfigManager(config_path).load_experiment(name)
