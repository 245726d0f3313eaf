"""Seeded random group and ring elements, and the sample mix for ideal comparisons."""

from __future__ import annotations

import random
from enum import StrEnum

from ..sequences import LambdaSeq
from .chains import NormalN, basis_entry_index, h_gens, prime_product
from .group import BasisVec, FinVec, GElem, QElem
from .ring import RingElem, ring_sum

RADIUS = 3


class SampleKind(StrEnum):
    RANDOM = "random"
    J_MEMBER = "j-member"
    N_MEMBER = "n-member"
    SUM = "sum"
    NEAR_MISS = "near-miss"


def random_basis(rng: random.Random, radius: int = RADIUS) -> BasisVec:
    return BasisVec(rng.randint(-radius, radius), rng.choice("ef"))


def random_vec(rng: random.Random, radius: int = RADIUS, max_terms: int = 3) -> FinVec:
    return FinVec.of(*(random_basis(rng, radius) for _ in range(rng.randint(0, max_terms))))


def random_q(rng: random.Random, radius: int = 2) -> QElem:
    invs = [i for i in range(-radius, radius + 1) if rng.random() < 0.3]
    return QElem.of(invs, rng.randint(-radius, radius))


def random_gelem(rng: random.Random, radius: int = RADIUS) -> GElem:
    return GElem(random_vec(rng, radius), random_q(rng))


def random_ring(
    rng: random.Random, terms: int = 3, coeff: int = 3, radius: int = RADIUS
) -> RingElem:
    items = [
        (random_gelem(rng, radius), rng.choice([c for c in range(-coeff, coeff + 1) if c]))
        for _ in range(rng.randint(1, terms))
    ]
    return RingElem(_merge(items))


def _merge(items: list[tuple[GElem, int]]) -> dict[GElem, int]:
    out: dict[GElem, int] = {}
    for g, c in items:
        out[g] = out.get(g, 0) + c
    return out


def random_h_vector(rng: random.Random, lam: LambdaSeq, i: int) -> FinVec:
    gens = sorted(h_gens(lam, i).gens)
    return FinVec.of(*rng.sample(gens, rng.randint(1, min(3, len(gens)))))


def random_n_vector(rng: random.Random, n: NormalN, radius: int = RADIUS) -> FinVec:
    """A sum of pairs of basis vectors with equal residues mod the period."""
    out = FinVec()
    for _ in range(rng.randint(1, 2)):
        b = random_basis(rng, radius)
        partner = BasisVec(b.index + n.period * rng.choice((-1, 0, 1)), rng.choice("ef"))
        if partner != b:
            out = out + FinVec.of(b, partner)
    return out


def j_member(rng: random.Random, lam: LambdaSeq, max_level: int = 3) -> RingElem:
    """(p_1 ... p_{i-1}) (x - 1) s with x in H_{lambda,i}: a member of J_lambda."""
    i = rng.randint(1, max_level)
    x = GElem(v=random_h_vector(rng, lam, i))
    s = random_ring(rng, terms=2, coeff=2)
    return RingElem.minus_one(x) * s * prime_product(i - 1)


def n_member(rng: random.Random, n: NormalN) -> RingElem:
    """(x - 1) s with x in N: a member of (N-1)ZG."""
    x = GElem(v=random_n_vector(rng, n))
    return RingElem.minus_one(x) * random_ring(rng, terms=2, coeff=2)


def near_miss(
    rng: random.Random, lam: LambdaSeq, n: NormalN | None, max_level: int = 3
) -> RingElem:
    """A member perturbed just enough that membership usually breaks."""
    choice = rng.randrange(3)
    if choice == 0:
        return j_member(rng, lam, max_level) + RingElem.of(random_gelem(rng), rng.choice((-1, 1)))
    if choice == 1 or n is None:
        # drop the last prime factor: (p_1 ... p_{i-2})(y - 1) with y entering at level i
        i = rng.randint(2, max_level + 1)
        candidates = [
            BasisVec(k, kind)
            for k in range(-RADIUS, RADIUS + 1)
            for kind in "ef"
            if basis_entry_index(lam, BasisVec(k, kind)) == i
        ]
        y = GElem(v=FinVec.of(rng.choice(candidates))) if candidates else GElem(q=QElem(shift=1))
        return RingElem.minus_one(y) * random_ring(rng, terms=2, coeff=2) * prime_product(i - 2)
    v = random_n_vector(rng, n) + FinVec.of(random_basis(rng))
    return RingElem.minus_one(GElem(v=v)) * random_ring(rng, terms=2, coeff=2)


def sample_mix(
    rng: random.Random,
    lam: LambdaSeq,
    n: NormalN | None,
    count: int,
    *,
    max_level: int = 3,
) -> list[tuple[SampleKind, RingElem]]:
    """``count`` elements cycling through random, member, sum and near-miss kinds.

    Without ``n`` the N-member kind is replaced by further J-members.
    """
    out: list[tuple[SampleKind, RingElem]] = []
    kinds = list(SampleKind)
    for k in range(count):
        kind = kinds[k % len(kinds)]
        if kind is SampleKind.RANDOM:
            r = random_ring(rng)
        elif kind is SampleKind.J_MEMBER or (kind is SampleKind.N_MEMBER and n is None):
            kind = SampleKind.J_MEMBER
            r = j_member(rng, lam, max_level)
        elif kind is SampleKind.N_MEMBER:
            assert n is not None
            r = n_member(rng, n)
        elif kind is SampleKind.SUM:
            parts = [j_member(rng, lam, max_level)]
            parts.append(n_member(rng, n) if n is not None else j_member(rng, lam, max_level))
            r = ring_sum(parts)
        else:
            r = near_miss(rng, lam, n, max_level)
        out.append((kind, r))
    return out


__all__ = [
    "SampleKind",
    "j_member",
    "n_member",
    "near_miss",
    "random_basis",
    "random_gelem",
    "random_h_vector",
    "random_n_vector",
    "random_q",
    "random_ring",
    "random_vec",
    "sample_mix",
]
