"""Finite-level checks for the Alt(5) branch construction.

Each check returns a ``CheckResult``; precondition failures raise ``GenusError``
subclasses and are converted to results by the scenario layer.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from functools import cache
from itertools import permutations

from loguru import logger
from tenacity import (
    Retrying,
    retry_if_result,
    stop_after_attempt,
    stop_after_delay,
    wait_none,
)

from ..budget import Budget, unlimited
from ..errors import IndistinguishablePrefixError, NotInAlt5Error, PortraitError
from ..permkernel import (
    GenSet,
    Perm,
    brute_force_closure,
    bsgs_build,
    bsgs_order,
    bsgs_random_element,
    derived_subgroup,
    is_even,
    is_k_transitive,
    normal_closure,
    perm_compose,
    perm_conjugate,
    perm_order,
    perm_power,
)
from ..report import CheckResult, Status, stopwatch
from ..sequences import LambdaSeq
from .portrait import (
    ARITY,
    level_kernel_contains,
    portrait_from_perm,
    section,
)
from .wreath import (
    ALPHA,
    ALT5_SPEC,
    BETA,
    alpha_sequence,
    beta_sequence,
    distinguished_vertex,
    exponent_of,
    gamma_genset,
    gamma_portraits,
    wreath_generators,
    wreath_order,
)

# -- density ---------------------------------------------------------------------------


def density_check(
    lam: LambdaSeq,
    depth: int,
    *,
    seed: int | None = None,
    budget: Budget | None = None,
) -> CheckResult:
    """PASS iff <xi, eta, a, b> acting on the depth-n tree has order |W_n|."""
    with stopwatch() as elapsed:
        portraits = gamma_portraits(lam, depth)
        inside_w = all(
            is_even(lab)
            for p in (portraits.xi, portraits.eta, portraits.a, portraits.b)
            for lab in p.labels.values()
        )
        target = wreath_order(depth)
        chain = bsgs_build(gamma_genset(lam, depth), seed=seed, known_order=target, budget=budget)
        order = bsgs_order(chain)
        logger.info("Density lambda={} depth={}: order {} (|W_n| = {})", lam, depth, order, target)
        return CheckResult.verdict(
            "density",
            inside_w and order == target,
            {
                "lambda": str(lam),
                "depth": depth,
                "order": order,
                "expected": target,
                "labels_in_alt5": inside_w,
            },
            elapsed(),
        )


# -- exponent and power closure --------------------------------------------------------


def exponent_check(depth: int, samples: int, seed: int) -> CheckResult:
    """Every generator and sampled element x of W_n satisfies x^(30^n) = 1."""
    with stopwatch() as elapsed:
        gens = wreath_generators(depth)
        chain = bsgs_build(gens, seed=seed, known_order=wreath_order(depth))
        rng = random.Random(seed)
        sample = list(gens.gens) + [bsgs_random_element(chain, rng) for _ in range(samples)]
        e = ALT5_SPEC.exponent**depth
        failures = sum(1 for x in sample if not perm_power(x, e).is_identity())
        return CheckResult.verdict(
            "exponent",
            failures == 0,
            {"depth": depth, "exponent": e, "sampled": len(sample), "failures": failures},
            elapsed(),
        )


def power_closure_check(
    m: int = 2,
    n: int = 1,
    *,
    samples: int = 50,
    seed: int = 0,
    extra_per_round: int = 10,
    max_rounds: int = 5,
    budget: Budget | None = None,
) -> CheckResult:
    """St(n) in W_m versus the normal closure of sampled (30^n)-th powers.

    (a) every sampled power lies in the level-n stabilizer;
    (b) the normal closure of the powers has order |W_m| / |W_n|.
    Sampling is topped up round by round until (b) reaches the target; running
    out of rounds or budget gives FAIL-INCONCLUSIVE with the achieved order.
    """
    if n > m:
        raise PortraitError(f"Level {n} exceeds depth {m}")
    budget = budget or unlimited()
    with stopwatch() as elapsed:
        gens = wreath_generators(m)
        chain = bsgs_build(gens, seed=seed, known_order=wreath_order(m), budget=budget)
        rng = random.Random(seed)
        e = ALT5_SPEC.exponent**n
        sample = list(gens.gens) + [bsgs_random_element(chain, rng) for _ in range(samples)]
        powers = [perm_power(x, e) for x in sample]
        inclusion = all(level_kernel_contains(portrait_from_perm(p, m), n) for p in powers)
        target = wreath_order(m) // wreath_order(n)

        rounds = 0

        def attempt() -> int:
            nonlocal rounds
            if rounds:
                extra = [bsgs_random_element(chain, rng) for _ in range(extra_per_round)]
                powers.extend(perm_power(x, e) for x in extra)
            rounds += 1
            closure = normal_closure(gens, powers, budget=budget)
            return bsgs_order(bsgs_build(closure, budget=budget))

        retrying = Retrying(
            stop=stop_after_attempt(max_rounds) | stop_after_delay(budget.remaining_s),
            retry=retry_if_result(lambda order: order < target),
            wait=wait_none(),
            retry_error_callback=lambda state: state.outcome.result(),
        )
        achieved = retrying(attempt)
        details = {
            "depth": m,
            "level": n,
            "power": e,
            "sampled_powers": len(powers),
            "inclusion": inclusion,
            "closure_order": achieved,
            "expected": target,
            "rounds": rounds,
        }
        logger.info("Power closure m={} n={}: order {} of {}", m, n, achieved, target)
        if inclusion and achieved < target:
            return CheckResult(
                name="power-closure",
                status=Status.INCONCLUSIVE,
                details=details,
                elapsed_ms=elapsed(),
            )
        return CheckResult.verdict(
            "power-closure", inclusion and achieved == target, details, elapsed()
        )


# -- automorphisms of Alt(5) -----------------------------------------------------------


@cache
def alt5_elements() -> tuple[Perm, ...]:
    return tuple(sorted(brute_force_closure(GenSet.of(ALPHA, BETA)), key=lambda p: p.arr))


@dataclass(frozen=True)
class Alt5Automorphism:
    """An automorphism z of Alt(5), given by its full table."""

    alpha_image: Perm
    beta_image: Perm
    table: tuple[tuple[Perm, Perm], ...]
    conjugator: Perm | None = None

    def apply(self, x: Perm) -> Perm:
        return dict(self.table)[x]

    def is_identity(self) -> bool:
        return self.alpha_image == ALPHA and self.beta_image == BETA


@dataclass(frozen=True)
class AutSearchResult:
    witness: Alt5Automorphism | None
    count: int
    cross_checked: bool


def _extend_to_homomorphism(alpha_image: Perm, beta_image: Perm) -> dict[Perm, Perm] | None:
    """Extend alpha -> alpha_image, beta -> beta_image along every Cayley-graph edge.

    Returns the table when the assignment is consistent on all edges, which makes it
    a homomorphism; None on the first conflict.
    """
    identity = Perm.identity(ARITY)
    table = {identity: identity}
    frontier = [identity]
    pairs = ((ALPHA, alpha_image), (BETA, beta_image))
    while frontier:
        g = frontier.pop()
        for s, s_img in pairs:
            h = perm_compose(g, s)
            img = perm_compose(table[g], s_img)
            known = table.get(h)
            if known is None:
                table[h] = img
                frontier.append(h)
            elif known != img:
                return None
    return table


@cache
def sym5_conjugations() -> dict[tuple[Perm, Perm], Perm]:
    """(alpha^c, beta^c) -> c for the 120 elements c of Sym(5)."""
    out: dict[tuple[Perm, Perm], Perm] = {}
    for images in permutations(range(ARITY)):
        c = Perm(tuple(images))
        out.setdefault((perm_conjugate(ALPHA, c), perm_conjugate(BETA, c)), c)
    return out


@cache
def alt5_automorphisms() -> tuple[Alt5Automorphism, ...]:
    """All automorphisms of Alt(5), by brute force over generator images.

    Candidates are pairs (order-3 element, order-5 element) whose edge-wise
    extension is a well-defined bijective homomorphism. The list is cross-checked
    against conjugation by the 120 elements of Sym(5) and ordered identity first.
    """
    elements = alt5_elements()
    threes = [x for x in elements if perm_order(x) == 3]
    fives = [x for x in elements if perm_order(x) == 5]
    conjugators = sym5_conjugations()
    found: list[Alt5Automorphism] = []
    for a_img in threes:
        for b_img in fives:
            table = _extend_to_homomorphism(a_img, b_img)
            if table is None or len(set(table.values())) != len(elements):
                continue
            found.append(
                Alt5Automorphism(
                    alpha_image=a_img,
                    beta_image=b_img,
                    table=tuple(sorted(table.items(), key=lambda kv: kv[0].arr)),
                    conjugator=conjugators.get((a_img, b_img)),
                )
            )
    found.sort(key=lambda z: (not z.is_identity(), z.alpha_image.arr, z.beta_image.arr))
    logger.debug("Alt(5) has {} automorphisms by brute force", len(found))
    return tuple(found)


def aut_alt5_search(source: Perm, target: Perm) -> AutSearchResult:
    """Find an automorphism z of Alt(5) with source^z = target, if any."""
    members = set(alt5_elements())
    for name, x in (("source", source), ("target", target)):
        if x.degree != ARITY or x not in members:
            raise NotInAlt5Error(f"{name} {x} is not in Alt(5)")
    autos = alt5_automorphisms()
    brute_pairs = {(z.alpha_image, z.beta_image) for z in autos}
    cross_checked = brute_pairs == set(sym5_conjugations())
    witness = next((z for z in autos if z.apply(source) == target), None)
    return AutSearchResult(witness=witness, count=len(autos), cross_checked=cross_checked)


def automorphism_count_check() -> CheckResult:
    with stopwatch() as elapsed:
        result = aut_alt5_search(ALPHA, BETA)
        ok = result.count == 120 and result.cross_checked and result.witness is None
        return CheckResult.verdict(
            "alt5-automorphisms",
            ok,
            {
                "count": result.count,
                "cross_checked_with_sym5": result.cross_checked,
                "alpha_to_beta_witness": result.witness is not None,
            },
            elapsed(),
        )


# -- distinguishing ----------------------------------------------------------------------


def distinguish_pair(mu: LambdaSeq, nu: LambdaSeq, depth: int) -> CheckResult:
    """Separate Gamma(mu) from Gamma(nu) through a section of coprime order.

    At the first index k where the sequences differ, the sections of a(mu) and
    a(nu) (of xi(mu), xi(nu) when k = 0) at the distinguished vertex are rooted
    with top permutations alpha and beta. No automorphism of Alt(5) maps one to
    the other because their orders 3 and 5 are coprime.
    """
    with stopwatch() as elapsed:
        k = mu.first_difference(nu, upto=depth - 1)
        if k is None:
            raise IndistinguishablePrefixError(
                f"indistinguishable prefix: {mu} and {nu} agree on indices 0..{depth - 1}"
            )
        vertex = distinguished_vertex(k)
        gm, gn = gamma_portraits(mu, depth), gamma_portraits(nu, depth)
        elem_mu, elem_nu = (gm.xi, gn.xi) if k == 0 else (gm.a, gn.a)
        sec_mu, sec_nu = section(elem_mu, vertex), section(elem_nu, vertex)
        rooted = sec_mu.is_rooted() and sec_nu.is_rooted()
        top_mu, top_nu = sec_mu.label(""), sec_nu.label("")
        orders = sorted((perm_order(top_mu), perm_order(top_nu)))
        search = aut_alt5_search(top_mu, top_nu)
        ok = (
            rooted
            and orders == [3, 5]
            and math.gcd(*orders) == 1
            and search.witness is None
        )
        logger.info("Distinguish {} vs {} at vertex {!r}: orders {}", mu, nu, vertex, orders)
        return CheckResult.verdict(
            "distinguish",
            ok,
            {
                "mu": str(mu),
                "nu": str(nu),
                "depth": depth,
                "index": k,
                "vertex": vertex,
                "generator": "xi" if k == 0 else "a",
                "section_orders": orders,
                "rooted": rooted,
                "automorphism_witness": search.witness is not None,
            },
            elapsed(),
        )


# -- conditions for the Alt(5) instance ----------------------------------------


def _pair_group() -> GenSet:
    """P = <(alpha, beta), (beta, alpha)> inside Sym(5) x Sym(5) acting on 10 points."""

    def pair(left: Perm, right: Perm) -> Perm:
        return Perm(left.arr + tuple(ARITY + i for i in right.arr))

    return GenSet.of(pair(ALPHA, BETA), pair(BETA, ALPHA))


def _restrict(p: Perm, block: int) -> Perm:
    lo = block * ARITY
    return Perm(tuple(p.arr[lo + i] - lo for i in range(ARITY)))


def two_transitivity_check() -> CheckResult:
    with stopwatch() as elapsed:
        ok = is_k_transitive(GenSet.of(ALPHA, BETA), 2)
        return CheckResult.verdict("doubly-transitive", ok, {"k": 2, "degree": ARITY}, elapsed())


def perfect_pair_check() -> CheckResult:
    """P has order 3600 and equals its derived subgroup."""
    with stopwatch() as elapsed:
        p = _pair_group()
        order = bsgs_order(bsgs_build(p))
        derived = bsgs_order(bsgs_build(derived_subgroup(p)))
        return CheckResult.verdict(
            "perfect-pair",
            order == 3600 and derived == order,
            {"order": order, "derived_order": derived},
            elapsed(),
        )


def phi_surjectivity_check() -> CheckResult:
    """phi_n is the projection of P onto a factor and <alpha_n, beta_n> = Alt(5)."""
    with stopwatch() as elapsed:
        x, y = _pair_group().gens
        per_bit: dict[str, dict[str, object]] = {}
        ok = True
        for bit in (0, 1):
            lam = LambdaSeq.branch(str(bit))
            a_n, b_n = alpha_sequence(lam)(0), beta_sequence(lam)(0)
            order = bsgs_order(bsgs_build(GenSet.of(a_n, b_n)))
            projection = _restrict(x, bit) == a_n and _restrict(y, bit) == b_n
            per_bit[str(bit)] = {"image_order": order, "is_projection": projection}
            ok = ok and order == 60 and projection
        return CheckResult.verdict("phi-surjective", ok, {"bits": per_bit}, elapsed())


def alt5_exponent_check() -> CheckResult:
    """alpha, beta generate a group of order 60 and exponent 30."""
    with stopwatch() as elapsed:
        elements = alt5_elements()
        exponent = exponent_of(elements)
        return CheckResult.verdict(
            "alt5-exponent",
            len(elements) == 60 and exponent == ALT5_SPEC.exponent,
            {"order": len(elements), "exponent": exponent},
            elapsed(),
        )


__all__ = [
    "Alt5Automorphism",
    "AutSearchResult",
    "alt5_automorphisms",
    "alt5_elements",
    "alt5_exponent_check",
    "aut_alt5_search",
    "automorphism_count_check",
    "density_check",
    "distinguish_pair",
    "exponent_check",
    "perfect_pair_check",
    "phi_surjectivity_check",
    "power_closure_check",
    "sym5_conjugations",
    "two_transitivity_check",
]
