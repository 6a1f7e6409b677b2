"""
Configuration module for kspde
"""

from .manager import (
    ConfigManager,
    ExperimentConfig,
    GridConfig,
    InitialDataConfig,
    LocalizationConfig,
    ModelConfig,
    NoiseConfig,
    SolverBlockConfig,
    load_config_from_file,
)
from .settings import Settings, get_settings, settings

__all__ = [
    "ConfigManager",
    "ExperimentConfig",
    "GridConfig",
    "InitialDataConfig",
    "LocalizationConfig",
    "ModelConfig",
    "NoiseConfig",
    "SolverBlockConfig",
    "load_config_from_file",
    "Settings",
    "get_settings",
    "settings",
]
