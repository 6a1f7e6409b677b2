"""
Ensemble experiments driven by noise: coupled contraction, moment bounds,
kinetic measure decay and the vanishing-viscosity ladder.
"""

import logging
from typing import List

import numpy as np
import pandas as pd

from kspde.analysis import (
    EnsembleResult,
    additive_second_moment,
    contraction_gap,
    dt_halving_check,
    lp_moment_check,
    sup_moment,
)
from kspde.analysis.contraction import HALVING_RATIO_RANGE
from kspde.config import ExperimentConfig, GridConfig, InitialDataConfig, ModelConfig, NoiseConfig, SolverBlockConfig
from kspde.field import l2_norm
from kspde.harness.experiments.base import Experiment
from kspde.harness.persistence import ReportWriter
from kspde.harness.pool import EnsemblePool
from kspde.kinetic import (
    XiGrid,
    accumulate_entropy_defect,
    band_mass_growth,
    ensemble_mean,
    initial_tail_profile,
    measure_decay_profile,
    tail_domination_check,
)
from kspde.model import ModelSpec
from kspde.models import InitialDataKind, NoiseFamily, Verdict
from kspde.noise import NoiseModel
from kspde.solver import CauchyReport, InitialDataFactory, SolverConfig, ladder_differences, solve

logger = logging.getLogger(__name__)

STDERR_SLACK = 3.0


class ContractionExperiment(Experiment):
    name = "contraction-coupled"
    summary = "Coupled L^1 contraction E||(u1 - u2)^+||_1 under shared noise"

    def default_config(self) -> ExperimentConfig:
        return ExperimentConfig(
            name=self.name,
            grid=GridConfig(points=128),
            model=ModelConfig(flux_exponent=2),
            noise=NoiseConfig(K=4, alpha=[1.0, 0.5, 0.5, 0.25]),
            solver=SolverBlockConfig(dt=2e-3, t_end=0.5, record_every=25),
            members=32,
            parameters={"second_initial_data": {"kind": "sine"}, "dt_constant": 1.0},
        )

    def gap_ensemble(self, solver_config: SolverConfig, config: ExperimentConfig, pool: EnsemblePool) -> EnsembleResult:
        first = self.initial_datum(config, solver_config.grid)
        second_data = InitialDataConfig(**self.parameter(config, "second_initial_data", {"kind": "sine"}))
        second = InitialDataFactory.create_initial_data(solver_config.grid, second_data)

        def member(seed: int) -> np.ndarray:
            return contraction_gap(solve(solver_config, first, seed), solve(solver_config, second, seed))

        return EnsembleResult.from_series(pool.run(member, self.member_seeds(config)))

    def run(self, config: ExperimentConfig, pool: EnsemblePool, writer: ReportWriter) -> List[Verdict]:
        base = self.solver_config(config)

        if base.noise.mode_count == 0:
            gaps = self.gap_ensemble(base, config, pool)
            growth = float(np.max(np.diff(gaps.series, axis=1))) if gaps.series.shape[1] > 1 else 0.0
            writer.write_frame("gap", pd.DataFrame({"gap": gaps.mean}))
            return [Verdict(name="deterministic-contraction", passed=growth <= 1e-12, measured=growth, bound=0.0)]

        constant = float(self.parameter(config, "dt_constant", 1.0))
        rows, verdicts = [], []
        for dt in (base.dt, base.dt / 2.0):
            solver_config = base.model_copy(update={"dt": dt})
            gaps = self.gap_ensemble(solver_config, config, pool)
            start, mean_end, stderr_end = float(gaps.mean[0]), float(gaps.mean[-1]), float(gaps.stderr[-1])
            bound = start + STDERR_SLACK * stderr_end + constant * dt
            rows.append({"dt": dt, "gap0": start, "gapT": mean_end, "stderr": stderr_end, "excess": mean_end - start})
            verdicts.append(
                Verdict(
                    name=f"coupled-contraction-dt{dt:g}",
                    passed=mean_end <= bound,
                    measured=mean_end,
                    bound=bound,
                    stderr=stderr_end,
                )
            )
            if dt == base.dt:
                writer.write_frame("gap", pd.DataFrame({"mean": gaps.mean, "stderr": gaps.stderr}))
        writer.write_frame("contraction", pd.DataFrame(rows))

        coarse, fine = rows
        halving = dt_halving_check(coarse["excess"], coarse["stderr"], fine["excess"], fine["stderr"])
        verdicts.append(
            Verdict(
                name="contraction-dt-halving",
                passed=halving.passed,
                measured=halving.ratio,
                bound=HALVING_RATIO_RANGE[1],
                detail=halving.detail,
            )
        )
        return verdicts


class LpMomentsExperiment(Experiment):
    name = "lp-moments"
    summary = "E sup_t ||u||_p^{pq} against 1 + E||u0||_p^{pq} across dt, plus the additive Gaussian oracle"

    def default_config(self) -> ExperimentConfig:
        return ExperimentConfig(
            name=self.name,
            grid=GridConfig(points=64),
            model=ModelConfig(flux_exponent=2),
            noise=NoiseConfig(K=4, alpha=[1.0, 0.5, 0.5, 0.25]),
            solver=SolverBlockConfig(dt=2.5e-3, t_end=0.5, record_every=1),
            members=16,
            parameters={
                "p": 2.0,
                "q": 2.0,
                "dt_factors": [4, 2, 1],
                "additive_members": 64,
                "additive_alpha": [0.5, 0.5, 0.5, 0.5],
                "additive_dt": 0.01,
            },
        )

    def run(self, config: ExperimentConfig, pool: EnsemblePool, writer: ReportWriter) -> List[Verdict]:
        base = self.solver_config(config)
        u0 = self.initial_datum(config, base.grid)
        p = float(self.parameter(config, "p", 2.0))
        q = float(self.parameter(config, "q", 2.0))
        seeds = self.member_seeds(config)

        ensembles = {}
        for factor in self.parameter(config, "dt_factors", [4, 2, 1]):
            solver_config = base.model_copy(update={"dt": base.dt * factor})
            ensembles[solver_config.dt] = pool.run(lambda seed: solve(solver_config, u0, seed), seeds)
        report = lp_moment_check(ensembles, p, q)
        writer.write_frame("moments", pd.DataFrame([level.model_dump() for level in report.levels]))

        alpha = [float(a) for a in self.parameter(config, "additive_alpha", [0.5, 0.5, 0.5, 0.5])]
        additive = SolverConfig(
            model=ModelSpec(flux_exponent=None),
            noise=NoiseModel(mode_count=len(alpha), alpha=alpha, family=NoiseFamily.ADDITIVE),
            grid=base.grid,
            dt=float(self.parameter(config, "additive_dt", 0.01)),
            t_end=base.t_end,
            record_every=1,
        )
        additive_members = int(self.parameter(config, "additive_members", 64))
        additive_seeds = self.member_seeds(config.model_copy(update={"members": additive_members}))
        runs = pool.run(lambda seed: solve(additive, u0, seed), additive_seeds)
        closed = additive_second_moment(u0, additive.noise, additive.t_end)
        final = EnsembleResult.from_scalars([l2_norm(run.final) ** 2 for run in runs])
        sups = EnsembleResult.from_scalars(sup_moment(runs, 2.0, 1.0))
        final_mean, sup_mean = float(final.mean[0]), float(sups.mean[0])
        doob_bound = 4.0 * closed + STDERR_SLACK * float(sups.stderr[0])

        return [
            Verdict(name="lp-moment-stability", passed=report.passed, measured=report.spread, bound=2.0),
            Verdict(
                name="additive-second-moment",
                passed=abs(final_mean - closed) <= 0.25 * closed,
                measured=final_mean,
                bound=closed,
                stderr=float(final.stderr[0]),
            ),
            Verdict(
                name="additive-doob-bound",
                passed=sup_mean <= doob_bound,
                measured=sup_mean,
                bound=doob_bound,
                stderr=float(sups.stderr[0]),
            ),
        ]


class MeasureDecayExperiment(Experiment):
    name = "measure-decay"
    summary = "Dyadic shell profile of the entropy defect measure at large |xi|"

    def default_config(self) -> ExperimentConfig:
        return ExperimentConfig(
            name=self.name,
            grid=GridConfig(points=128),
            model=ModelConfig(flux_exponent=2),
            noise=NoiseConfig(K=2, alpha=[0.5, 0.5]),
            initial_data=InitialDataConfig(kind=InitialDataKind.COSINE, amplitude=3.0),
            solver=SolverBlockConfig(dt=5e-3, t_end=0.5, record_every=1),
            members=8,
            parameters={"levels": [0, 1, 2, 3, 4], "xi_cells": 1024, "band_ks": [1.0, 2.0, 4.0, 8.0], "alpha": 0.5},
        )

    def run(self, config: ExperimentConfig, pool: EnsemblePool, writer: ReportWriter) -> List[Verdict]:
        solver_config = self.solver_config(config)
        u0 = self.initial_datum(config, solver_config.grid)
        levels = [int(level) for level in self.parameter(config, "levels", [0, 1, 2, 3, 4])]
        xi = XiGrid.dyadic(max(levels), int(self.parameter(config, "xi_cells", 1024)))

        def member(seed: int):
            trajectory = solve(solver_config, u0, seed)
            return accumulate_entropy_defect(trajectory, xi), trajectory.initial

        results = pool.run(member, self.member_seeds(config))
        histograms = [hist for hist, _ in results]
        initials = [initial for _, initial in results]

        decay = measure_decay_profile(histograms, levels)
        band = band_mass_growth(histograms, self.parameter(config, "band_ks", [1.0, 2.0, 4.0, 8.0]))
        tail = tail_domination_check(
            decay.scaled_mass, initial_tail_profile(initials, levels), float(self.parameter(config, "alpha", 0.5))
        )

        mean = ensemble_mean(histograms)
        writer.write_frame("decay", decay.to_frame())
        writer.write_frame("xi_marginal", pd.DataFrame({"xi": xi.centers, "mass": mean.xi_marginal()}))
        return [
            Verdict(
                name="shell-decay",
                passed=decay.passed,
                measured=decay.scaled_mass[-1],
                bound=0.01 * decay.scaled_mass[0],
            ),
            Verdict(name="band-growth", passed=band.passed, measured=band.growth_exponent, bound=1.1),
            Verdict(name="tail-domination", passed=tail.passed, measured=tail.constant, detail=f"bound {tail.bound}"),
        ]


class VanishingViscosityExperiment(Experiment):
    name = "vanishing-viscosity-cauchy"
    summary = "Consecutive L^1 differences along a decreasing viscosity ladder with shared noise"

    def default_config(self) -> ExperimentConfig:
        return ExperimentConfig(
            name=self.name,
            grid=GridConfig(points=64),
            model=ModelConfig(flux_exponent=2),
            noise=NoiseConfig(K=2, alpha=[0.5, 0.5]),
            solver=SolverBlockConfig(dt=5e-3, t_end=0.5, record_every=5),
            members=16,
            parameters={"kappas": [0.2, 0.1, 0.05, 0.025]},
        )

    def run(self, config: ExperimentConfig, pool: EnsemblePool, writer: ReportWriter) -> List[Verdict]:
        solver_config = self.solver_config(config)
        u0 = self.initial_datum(config, solver_config.grid)
        kappas = [float(k) for k in self.parameter(config, "kappas", [0.2, 0.1, 0.05, 0.025])]

        table = pool.run(lambda seed: ladder_differences(solver_config, u0, seed, kappas), self.member_seeds(config))
        report = CauchyReport.from_member_differences(kappas, np.stack(table))
        differences = np.asarray(report.differences)
        worst = float(np.max(differences[1:] / differences[:-1])) if np.all(differences[:-1] > 0) else float("inf")

        writer.write_frame(
            "ladder",
            pd.DataFrame({"kappa": kappas[1:], "difference": report.differences, "stderr": report.stderr}),
        )
        return [Verdict(name="viscosity-cauchy", passed=report.passed, measured=worst, bound=1.1)]
