"""Checks over the soluble construction: decoding, conjugators, ideal equality, translation."""

from __future__ import annotations

import random
from collections import Counter
from itertools import product

from loguru import logger

from ..budget import Budget, unlimited
from ..errors import HypothesisViolation
from ..report import CheckResult, stopwatch
from ..sequences import LambdaSeq
from .chains import (
    NormalN,
    conjugate_gens,
    conjugator,
    gamma_sequence,
    h_entry_index,
    h_gens,
    nh_equal,
    translate_sequence,
    union_radius_ok,
)
from .group import FinVec, GElem, e, f, g_inv
from .oracle import brute_force_in_J, decode_prefix, in_I, in_J, truncation_bound
from .sampling import sample_mix


def decode_check(lam: LambdaSeq, length: int) -> CheckResult:
    with stopwatch() as elapsed:
        decoded = decode_prefix(lam, length)
        expected = lam.prefix(length)
        logger.info("Decoded {} -> {}", lam, decoded)
        return CheckResult.verdict(
            "decode",
            decoded == expected,
            {"lambda": str(lam), "length": length, "decoded": decoded, "expected": expected},
            elapsed(),
        )


def decode_sweep_check(length: int, *, budget: Budget | None = None) -> CheckResult:
    """decode_prefix round-trips every prefix of the given length."""
    budget = budget or unlimited()
    with stopwatch() as elapsed:
        failures: list[str] = []
        total = 0
        for bits in product("01", repeat=length):
            word = "".join(bits)
            if decode_prefix(LambdaSeq.soluble(word), length) != word:
                failures.append(word)
            total += 1
            budget.check(achieved=total)
        return CheckResult.verdict(
            "decode-sweep",
            not failures,
            {"length": length, "prefixes": total, "failures": failures[:10]},
            elapsed(),
        )


def conjugator_postcondition(alpha: LambdaSeq, beta: LambdaSeq, n: int) -> int | None:
    """First level i <= n with H_{alpha,i}^g != H_{beta,i}, or None."""
    g = conjugator(alpha, beta, n)
    for i in range(1, n + 1):
        if conjugate_gens(h_gens(alpha, i), g) != h_gens(beta, i).gens:
            return i
    return None


def conjugator_check(alpha: LambdaSeq, beta: LambdaSeq, n: int) -> CheckResult:
    with stopwatch() as elapsed:
        g = conjugator(alpha, beta, n)
        bad_level = conjugator_postcondition(alpha, beta, n)
        in_range = all(1 <= m <= (n + 1) // 2 for m in g.q.invs)
        return CheckResult.verdict(
            "conjugator",
            bad_level is None and in_range and not g.v and g.q.shift == 0,
            {
                "alpha": str(alpha),
                "beta": str(beta),
                "n": n,
                "g": str(g),
                "violating_level": bad_level,
            },
            elapsed(),
        )


def conjugator_sweep_check(prefix_len: int = 3, max_n: int = 6) -> CheckResult:
    """Postcondition over all prefix pairs of ``prefix_len`` and every n <= max_n."""
    with stopwatch() as elapsed:
        words = ["".join(bits) for bits in product("01", repeat=prefix_len)]
        failures: list[dict[str, object]] = []
        cases = 0
        for a, b in product(words, repeat=2):
            alpha, beta = LambdaSeq.soluble(a), LambdaSeq.soluble(b)
            for n in range(1, max_n + 1):
                cases += 1
                level = conjugator_postcondition(alpha, beta, n)
                if level is not None:
                    failures.append({"alpha": a, "beta": b, "n": n, "level": level})
        return CheckResult.verdict(
            "conjugator-sweep",
            not failures,
            {"prefix_len": prefix_len, "max_n": max_n, "cases": cases, "failures": failures[:10]},
            elapsed(),
        )


def union_check(lam: LambdaSeq, radius: int = 10) -> CheckResult:
    """Every e_i, f_i with |i| <= radius enters the chain at a finite level."""
    with stopwatch() as elapsed:
        levels = [
            h_entry_index(lam, FinVec.of(b))
            for i in range(-radius, radius + 1)
            for b in (e(i), f(i))
        ]
        top = max(levels)
        return CheckResult.verdict(
            "chain-union",
            union_radius_ok(lam, radius, top),
            {"lambda": str(lam), "radius": radius, "max_entry_level": top},
            elapsed(),
        )


def check_hypothesis(gamma: LambdaSeq, beta: LambdaSeq, n: NormalN) -> int:
    """Verify N*H_{gamma,i} = N*H_{beta,i} up to the stable level.

    Returns the number of levels compared; from ``n.stable_level()`` on both
    sides are V.

    Raises:
        HypothesisViolation: naming the first violating level.
    """
    top = n.stable_level() + 1
    for i in range(1, top + 1):
        if not nh_equal(gamma, beta, n, i):
            raise HypothesisViolation(
                f"N*H_(gamma,{i}) != N*H_(beta,{i}) for gamma={gamma}, beta={beta}", level=i
            )
    return top


def verify_annihilator_equality(
    alpha: LambdaSeq,
    beta: LambdaSeq,
    n: NormalN,
    samples: int,
    seed: int,
    *,
    budget: Budget | None = None,
) -> CheckResult:
    """J_gamma + (N-1)ZG = J_beta + (N-1)ZG on a seeded sample.

    gamma is alpha moved by g(alpha, beta, m - 1); the sample mixes random
    elements, members built from each side, sums and near misses.
    """
    budget = budget or unlimited()
    with stopwatch() as elapsed:
        k = n.period - 1
        g = conjugator(alpha, beta, k)
        gamma = gamma_sequence(alpha, beta, k)
        levels = check_hypothesis(gamma, beta, n)
        rng = random.Random(seed)
        half = samples // 2
        mix = sample_mix(rng, gamma, n, samples - half) + sample_mix(rng, beta, n, half)
        kinds: Counter[str] = Counter()
        members = 0
        disagreements: list[str] = []
        for done, (kind, r) in enumerate(mix, start=1):
            left, right = in_I(gamma, n, r).member, in_I(beta, n, r).member
            kinds[kind.value] += 1
            members += left
            if left != right:
                disagreements.append(str(r))
            budget.check(achieved=done)
        logger.info(
            "Ideal equality alpha={} beta={} m={}: {} disagreements in {} samples",
            alpha, beta, n.period, len(disagreements), len(mix),
        )
        return CheckResult.verdict(
            "ideal-equality",
            not disagreements,
            {
                "alpha": str(alpha),
                "beta": str(beta),
                "gamma": str(gamma),
                "period": n.period,
                "conjugator": str(g),
                "hypothesis_levels": levels,
                "samples": len(mix),
                "kinds": dict(sorted(kinds.items())),
                "members": members,
                "disagreements": len(disagreements),
                "first_disagreement": disagreements[0] if disagreements else None,
            },
            elapsed(),
        )


def translate_check(
    alpha: LambdaSeq,
    g: GElem,
    samples: int,
    seed: int,
    *,
    budget: Budget | None = None,
) -> CheckResult:
    """J_gamma = g^-1 J_alpha: r in J_gamma iff g r in J_alpha, on a seeded sample."""
    budget = budget or unlimited()
    with stopwatch() as elapsed:
        gamma = translate_sequence(alpha, g)
        rng = random.Random(seed)
        half = samples // 2
        g_inverse = g_inv(g)
        mix = [r for _, r in sample_mix(rng, gamma, None, samples - half)]
        # members of J_alpha pulled back to J_gamma
        mix += [g_inverse * r for _, r in sample_mix(rng, alpha, None, half)]
        members = 0
        disagreements: list[str] = []
        for done, r in enumerate(mix, start=1):
            left, right = in_J(gamma, r).member, in_J(alpha, g * r).member
            members += left
            if left != right:
                disagreements.append(str(r))
            budget.check(achieved=done)
        return CheckResult.verdict(
            "translate",
            not disagreements,
            {
                "alpha": str(alpha),
                "gamma": str(gamma),
                "g": str(g),
                "samples": len(mix),
                "members": members,
                "disagreements": len(disagreements),
                "first_disagreement": disagreements[0] if disagreements else None,
            },
            elapsed(),
        )


def oracle_soundness_check(
    lam: LambdaSeq,
    samples: int,
    seed: int,
    *,
    budget: Budget | None = None,
) -> CheckResult:
    """in_J agrees with direct evaluation of eval_u at every level up to 2 * i_max."""
    budget = budget or unlimited()
    with stopwatch() as elapsed:
        rng = random.Random(seed)
        disagreements: list[str] = []
        members = 0
        widest = 0
        for done, (_, r) in enumerate(sample_mix(rng, lam, None, samples), start=1):
            bound = truncation_bound(lam, r)
            widest = max(widest, bound)
            fast = in_J(lam, r).member
            members += fast
            if fast != brute_force_in_J(lam, r, 2 * bound):
                disagreements.append(str(r))
            budget.check(achieved=done)
        return CheckResult.verdict(
            "oracle-soundness",
            not disagreements,
            {
                "lambda": str(lam),
                "samples": samples,
                "members": members,
                "max_truncation_bound": widest,
                "disagreements": len(disagreements),
                "first_disagreement": disagreements[0] if disagreements else None,
            },
            elapsed(),
        )


__all__ = [
    "check_hypothesis",
    "conjugator_check",
    "conjugator_postcondition",
    "conjugator_sweep_check",
    "decode_check",
    "decode_sweep_check",
    "oracle_soundness_check",
    "translate_check",
    "union_check",
    "verify_annihilator_equality",
]
