"""
Command-line entry point: ``kspde run``, ``kspde list`` and ``kspde fit-exponents``.
"""

import argparse
import logging
import sys
from typing import List, Optional

from kspde.config import ConfigManager, ExperimentConfig, settings
from kspde.errors import KspdeError
from kspde.harness.pool import EnsemblePool
from kspde.harness.runner import list_experiments, resolve_config, run_experiment
from kspde.model import Localization, ModelSpec, fit_exponents
from kspde.models import SymbolComponent

logger = logging.getLogger(__name__)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="kspde", description="Numerical lab for degenerate stochastic conservation laws")
    commands = parser.add_subparsers(dest="command", required=True)

    run = commands.add_parser("run", help="Run a canned experiment")
    run.add_argument("experiment", help="Experiment name (see `kspde list`)")
    run.add_argument("--config", help="YAML/JSON configuration file")
    run.add_argument("--members", type=int, help="Ensemble size override")
    run.add_argument("--seed", type=int, help="Seed base override")
    run.add_argument("--out", help="Output directory")

    commands.add_parser("list", help="List canned experiments")

    fit = commands.add_parser("fit-exponents", help="Fit non-degeneracy exponents for a configured model")
    fit.add_argument("--config", required=True, help="YAML/JSON configuration file")
    fit.add_argument("--name", help="Experiment entry to read the model from")
    fit.add_argument("--component", choices=[c.value for c in SymbolComponent], default=SymbolComponent.FULL.value)
    return parser


def command_run(args: argparse.Namespace) -> int:
    config = resolve_config(args.experiment, args.config)
    updates = {}
    if args.members is not None:
        updates["members"] = args.members
    if args.seed is not None:
        updates["seed"] = args.seed
    if updates:
        config = ExperimentConfig(**{**config.model_dump(mode="json"), **updates})
    record = run_experiment(config, EnsemblePool(), args.out)
    for verdict in record.verdicts:
        status = "PASS" if verdict.passed else "FAIL"
        print(f"{status}  {verdict.name}: measured={verdict.measured} bound={verdict.bound}")
    print(f"Reports in {', '.join(record.outputs)}")
    return 0 if record.passed else 1


def command_list(args: argparse.Namespace) -> int:
    for name, summary in list_experiments():
        print(f"{name:28s} {summary}")
    return 0


def command_fit_exponents(args: argparse.Namespace) -> int:
    config = ConfigManager(args.config).load_experiment(args.name)
    spec = ModelSpec.from_config(config.model)
    localization = Localization.from_config(config.localization, spec)
    J_list = config.parameters.get("J", [4, 8, 16])
    delta_list = config.parameters.get("delta", [0.25, 0.5, 1.0])
    fit, table = fit_exponents(
        spec, localization, J_list, delta_list, dim=config.grid.dim, component=SymbolComponent(args.component)
    )
    print(table.to_string(index=False))
    print(f"alpha={fit.alpha:.6g} beta={fit.beta:.6g} residual={fit.fit_residual:.3g}")
    print(f"s_bound={fit.s_bound:.6g} r_bound={fit.r_bound:.6g}")
    return 0


def main(argv: Optional[List[str]] = None) -> int:
    logging.basicConfig(
        level=getattr(logging, settings.LOG_LEVEL.upper(), logging.INFO),
        format="%(asctime)s - %(name)s - %(levelname)s - %(message)s",
    )
    args = build_parser().parse_args(argv)
    handlers = {"run": command_run, "list": command_list, "fit-exponents": command_fit_exponents}
    try:
        return handlers[args.command](args)
    except KspdeError as e:
        logger.error(f"{args.command} failed: {e}")
        return 2


if __name__ == "__main__":
    sys.exit(main())
