"""Scenarios over the Alt(5) branch construction."""

from __future__ import annotations

from ..budget import Budget
from ..report import CheckResult, guarded
from ..sequences import LambdaSeq
from ..treewreath import (
    alt5_exponent_check,
    automorphism_count_check,
    density_check,
    distinguish_pair,
    exponent_check,
    perfect_pair_check,
    phi_surjectivity_check,
    power_closure_check,
    two_transitivity_check,
)
from .base import ScenarioConfig

EXPONENT_SAMPLES = 20


def branch_density(cfg: ScenarioConfig, seed: int) -> list[CheckResult]:
    depth = cfg.depth_for("branch-density")
    lam = LambdaSeq.branch(cfg.lam)
    return [
        guarded(
            "density",
            lambda: density_check(
                lam, depth, seed=seed, budget=Budget(cfg.budget_ms, label="density")
            ),
        ),
        guarded(
            "exponent",
            lambda: exponent_check(depth, min(cfg.samples, EXPONENT_SAMPLES), seed),
        ),
    ]


def branch_power_closure(cfg: ScenarioConfig, seed: int) -> list[CheckResult]:
    depth = cfg.depth_for("branch-power-closure")
    return [
        guarded(
            "power-closure",
            lambda: power_closure_check(
                depth,
                1,
                samples=min(cfg.samples, 50),
                seed=seed,
                budget=Budget(cfg.budget_ms, label="power-closure"),
            ),
        )
    ]


def branch_distinguish(cfg: ScenarioConfig, seed: int) -> list[CheckResult]:
    depth = cfg.depth_for("branch-distinguish")
    mu, nu = LambdaSeq.branch(cfg.mu), LambdaSeq.branch(cfg.nu)
    return [
        guarded("distinguish", lambda: distinguish_pair(mu, nu, depth)),
        guarded("alt5-automorphisms", automorphism_count_check),
    ]


def branch_conditions(cfg: ScenarioConfig, seed: int) -> list[CheckResult]:
    return [
        guarded("doubly-transitive", two_transitivity_check),
        guarded("perfect-pair", perfect_pair_check),
        guarded("phi-surjective", phi_surjectivity_check),
        guarded("alt5-exponent", alt5_exponent_check),
    ]
