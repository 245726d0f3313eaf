"""Scenarios over the soluble group-ring construction."""

from __future__ import annotations

from ..budget import Budget
from ..report import CheckResult, guarded
from ..sequences import LambdaSeq
from ..solring import (
    NormalN,
    conjugator,
    conjugator_check,
    conjugator_sweep_check,
    decode_check,
    oracle_soundness_check,
    translate_check,
    union_check,
    verify_annihilator_equality,
)
from .base import ScenarioConfig


def soluble_decode(cfg: ScenarioConfig, seed: int) -> list[CheckResult]:
    lam = LambdaSeq.soluble(cfg.lam)
    return [guarded("decode", lambda: decode_check(lam, cfg.length))]


def soluble_conjugator(cfg: ScenarioConfig, seed: int) -> list[CheckResult]:
    alpha, beta = LambdaSeq.soluble(cfg.mu), LambdaSeq.soluble(cfg.nu)
    return [
        guarded("conjugator", lambda: conjugator_check(alpha, beta, cfg.length)),
        guarded("conjugator-sweep", conjugator_sweep_check),
    ]


def soluble_ideal_equality(cfg: ScenarioConfig, seed: int) -> list[CheckResult]:
    alpha, beta = LambdaSeq.soluble(cfg.mu), LambdaSeq.soluble(cfg.nu)
    return [
        guarded(
            "ideal-equality",
            lambda: verify_annihilator_equality(
                alpha,
                beta,
                NormalN(cfg.period),
                cfg.samples,
                seed,
                budget=Budget(cfg.budget_ms, label="ideal-equality"),
            ),
        )
    ]


def soluble_translate(cfg: ScenarioConfig, seed: int) -> list[CheckResult]:
    """g = g(mu, nu, n) with n covering every given bit, so gamma agrees with nu."""
    alpha, beta = LambdaSeq.soluble(cfg.mu), LambdaSeq.soluble(cfg.nu)
    n = 2 * max(len(cfg.mu), len(cfg.nu)) - 1
    g = conjugator(alpha, beta, n)
    return [
        guarded(
            "translate",
            lambda: translate_check(
                alpha, g, cfg.samples, seed, budget=Budget(cfg.budget_ms, label="translate")
            ),
        )
    ]


def soluble_oracle(cfg: ScenarioConfig, seed: int) -> list[CheckResult]:
    lam = LambdaSeq.soluble(cfg.lam)
    return [
        guarded(
            "oracle-soundness",
            lambda: oracle_soundness_check(
                lam, cfg.samples, seed, budget=Budget(cfg.budget_ms, label="oracle-soundness")
            ),
        ),
        guarded("chain-union", lambda: union_check(lam)),
    ]
