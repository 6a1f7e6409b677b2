import os

from dotenv import load_dotenv
from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict

# Load environment variables from .env file
load_dotenv()


class Settings(BaseSettings):
    """Process-wide settings loaded from KSPDE_* environment variables."""

    model_config = SettingsConfigDict(env_prefix="KSPDE_", env_file=".env", case_sensitive=True, extra="ignore")

    # Ensemble execution
    THREADS: int = Field(default_factory=lambda: os.cpu_count() or 1, ge=1, description="Worker cap for ensemble runs")

    # Logging
    LOG_LEVEL: str = Field(default="INFO", description="Root log level for the CLI")

    # Paths
    OUTPUT_DIR: str = Field(default="./runs", description="Default directory for reports")
    CONFIG_PATH: str = Field(default="config/experiments.yaml", description="Canned experiment defaults")


def get_settings() -> Settings:
    """Re-read settings from the environment."""
    return Settings()


# Global settings instance
settings = Settings()
