"""
Experiment runner: configuration resolution, execution and reporting.
"""

import logging
import time
from pathlib import Path
from typing import Any, Dict, List, Optional, Tuple

from kspde.config import ConfigManager, ExperimentConfig, settings
from kspde.harness.experiments import ExperimentFactory
from kspde.harness.persistence import ReportWriter
from kspde.harness.pool import EnsemblePool
from kspde.harness.records import RunRecord

logger = logging.getLogger(__name__)


def _deep_merge(base: Dict[str, Any], overrides: Dict[str, Any]) -> Dict[str, Any]:
    merged = dict(base)
    for key, value in overrides.items():
        if isinstance(value, dict) and isinstance(merged.get(key), dict):
            merged[key] = _deep_merge(merged[key], value)
        else:
            merged[key] = value
    return merged


def resolve_config(name: str, config_path: Optional[str] = None) -> ExperimentConfig:
    """
    The experiment's canonical configuration, overlaid with its entry in the
    configuration file when one exists.
    """
    experiment = ExperimentFactory.create_experiment(name)
    payload = experiment.default_config().model_dump(mode="json")

    path = Path(config_path or settings.CONFIG_PATH)
    if path.exists():
        manager = ConfigManager(str(path))
        raw = manager.load_raw()
        entries = raw.get("experiments") or {}
        if experiment.name in entries:
            payload = _deep_merge(payload, entries[experiment.name] or {})
        elif "experiments" not in raw and raw.get("name") in (name, experiment.name):
            payload = _deep_merge(payload, raw)
    elif config_path is not None:
        raise FileNotFoundError(f"Configuration file not found: {config_path}")

    payload["name"] = experiment.name
    return ExperimentConfig(**payload)


def run_experiment(
    config: ExperimentConfig,
    pool: Optional[EnsemblePool] = None,
    output_dir: Optional[str] = None,
) -> RunRecord:
    """Run one experiment, write its reports and return the record."""
    experiment = ExperimentFactory.create_experiment(config.name)
    pool = pool or EnsemblePool()
    target = Path(output_dir or config.output_dir or Path(settings.OUTPUT_DIR) / experiment.name)
    writer = ReportWriter(target)
    config_hash = config.config_hash()

    logger.info(f"Running {experiment.name} with {config.members} members (config {config_hash[:12]})")
    start = time.perf_counter()
    verdicts = experiment.run(config, pool, writer)
    elapsed = time.perf_counter() - start

    for verdict in verdicts:
        if not verdict.passed:
            logger.warning(f"{experiment.name}: check {verdict.name} failed ({verdict.measured} vs {verdict.bound})")

    writer.write_json("config", config.model_dump(mode="json"))
    record = RunRecord(
        name=experiment.name,
        config_hash=config_hash,
        seeds=experiment.member_seeds(config),
        wall_clock=elapsed,
        verdicts=verdicts,
    )
    writer.write_json(
        "report",
        {
            "name": record.name,
            "pass": record.passed,
            "config_hash": config_hash,
            "seeds": record.seeds,
            "verdicts": [v.model_dump(mode="json") for v in verdicts],
        },
    )
    record = record.model_copy(update={"outputs": list(writer.written)})
    logger.info(f"{experiment.name} finished in {elapsed:.2f}s: {'pass' if record.passed else 'FAIL'}")
    return record


def list_experiments() -> List[Tuple[str, str]]:
    """(name, one-line summary) of every registered experiment."""
    return [
        (name, ExperimentFactory.create_experiment(name).summary)
        for name in ExperimentFactory.get_supported_experiments()
    ]
