"""
Tests for settings and the experiment configuration manager
"""

import json
import re
from pathlib import Path

import pytest
from pydantic import ValidationError

import kspde
from kspde.config import ConfigManager, ExperimentConfig, NoiseConfig, Settings, load_config_from_file
from kspde.models import NoiseFamily


class TestSettings:
    """Test environment-driven settings."""

    def test_threads_from_environment(self, monkeypatch):
        """KSPDE_THREADS caps the worker pool."""
        monkeypatch.setenv("KSPDE_THREADS", "3")
        assert Settings().THREADS == 3

    def test_defaults(self, monkeypatch):
        """Output and config paths have defaults."""
        monkeypatch.delenv("KSPDE_OUTPUT_DIR", raising=False)
        settings = Settings()
        assert settings.OUTPUT_DIR == "./runs"
        assert settings.THREADS >= 1


class TestExperimentConfig:
    """Test the experiment schema."""

    def test_alpha_length_checked(self):
        """alpha must have K entries."""
        with pytest.raises(ValidationError):
            NoiseConfig(K=2, alpha=[1.0])

    def test_hash_ignores_output_dir(self):
        """The output location does not change the config hash."""
        a = ExperimentConfig(name="heat-exact", output_dir="/tmp/a")
        b = ExperimentConfig(name="heat-exact", output_dir="/tmp/b")
        assert a.config_hash() == b.config_hash()

    def test_hash_tracks_numerics(self):
        """Changing a numeric knob changes the hash."""
        a = ExperimentConfig(name="heat-exact")
        b = ExperimentConfig(name="heat-exact", seed=1)
        assert a.config_hash() != b.config_hash()


class TestConfigManager:
    """Test loading configuration files."""

    @pytest.fixture
    def yaml_file(self, tmp_path):
        """Multi-experiment YAML file with an environment reference."""
        path = tmp_path / "experiments.yaml"
        path.write_text(
            "experiments:\n"
            "  lp-moments:\n"
            "    members: 4\n"
            "    output_dir: ${KSPDE_TEST_OUT}\n"
            "    noise: {K: 1, alpha: [0.5], family: additive}\n"
        )
        return path

    def test_load_named_experiment(self, yaml_file, monkeypatch):
        """Entries are selected by name and ${VAR} references resolved."""
        monkeypatch.setenv("KSPDE_TEST_OUT", "/tmp/out")
        config = ConfigManager(str(yaml_file)).load_experiment("lp-moments")
        assert config.name == "lp-moments"
        assert config.members == 4
        assert config.output_dir == "/tmp/out"
        assert config.noise.family == NoiseFamily.ADDITIVE

    def test_unknown_name(self, yaml_file):
        """Missing entries raise KeyError."""
        with pytest.raises(KeyError):
            ConfigManager(str(yaml_file)).load_experiment("nope")

    def test_experiment_names(self, yaml_file):
        """Names of all entries are listed."""
        assert ConfigManager(str(yaml_file)).experiment_names() == ["lp-moments"]

    def test_json_single_experiment(self, tmp_path):
        """A JSON file may hold one experiment."""
        path = tmp_path / "run.json"
        path.write_text(json.dumps({"name": "heat-exact", "members": 2}))
        config = load_config_from_file(str(path))
        assert config.name == "heat-exact"
        assert config.members == 2

    def test_missing_file(self, tmp_path):
        """A missing file raises FileNotFoundError."""
        with pytest.raises(FileNotFoundError):
            ConfigManager(str(tmp_path / "missing.yaml")).load_raw()

    def test_unsupported_suffix(self, tmp_path):
        """Only YAML and JSON are accepted."""
        path = tmp_path / "run.toml"
        path.write_text("name = 'x'")
        with pytest.raises(ValueError):
            ConfigManager(str(path)).load_raw()


class TestPackageMetadata:
    """Test that the package and its build manifest agree."""

    def test_version_matches_setup(self):
        """kspde.__version__ is the version declared in setup.py."""
        setup_py = Path(__file__).resolve().parent.parent / "setup.py"
        declared = re.search(r'version="([^"]+)"', setup_py.read_text(encoding="utf-8"))
        assert declared is not None
        assert kspde.__version__ == declared.group(1)
