"""Primes, the chains H_{lambda,i} of subgroups of V, and the G-invariant subgroups N_m.

H_{lambda,i} is spanned by e_0, f_0, ..., e_-i, f_-i and c_1, ..., c_i where
c_{2n-1}, c_{2n} is (e_n, f_n) when lambda(n) = 0 and (f_n, e_n) otherwise.
Every generator is a basis vector, so membership is support inclusion and each
basis vector has a first level from which on it stays in the chain.
"""

from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass
from functools import cache

import sympy

from ..sequences import LambdaSeq
from .group import BasisVec, FinVec, GElem, QElem, e, f


@cache
def prime(i: int) -> int:
    """p_i, the i-th prime (p_1 = 2)."""
    if i < 1:
        raise ValueError(f"Prime index must be >= 1, got {i}")
    return int(sympy.prime(i))


def prime_product(upto: int) -> int:
    """p_1 * ... * p_upto (1 for upto <= 0)."""
    out = 1
    for j in range(1, upto + 1):
        out *= prime(j)
    return out


def prime_index_above(bound: int) -> int:
    """Least i with p_i > bound."""
    return int(sympy.primepi(max(bound, 1))) + 1


def c_vector(lam: LambdaSeq, j: int) -> BasisVec:
    if j < 1:
        raise ValueError(f"c-vector index must be >= 1, got {j}")
    n = (j + 1) // 2
    first, second = (e(n), f(n)) if lam.bit(n) == 0 else (f(n), e(n))
    return first if j % 2 else second


@dataclass(frozen=True)
class HSub:
    lam: LambdaSeq
    level: int
    gens: frozenset[BasisVec]

    def contains(self, v: FinVec) -> bool:
        return v.support <= self.gens


def h_gens(lam: LambdaSeq, i: int) -> HSub:
    if i < 1:
        raise ValueError(f"Chain level must be >= 1, got {i}")
    gens = {b for j in range(i + 1) for b in (e(-j), f(-j))}
    gens.update(c_vector(lam, j) for j in range(1, i + 1))
    return HSub(lam=lam, level=i, gens=frozenset(gens))


def basis_entry_index(lam: LambdaSeq, b: BasisVec) -> int:
    """Least i0 with b in H_{lambda,i} for every i >= i0."""
    if b.index <= 0:
        return max(1, -b.index)
    n = b.index
    is_first = (b.kind == "e") == (lam.bit(n) == 0)
    return 2 * n - 1 if is_first else 2 * n


def h_entry_index(lam: LambdaSeq, v: FinVec) -> int:
    return max((basis_entry_index(lam, b) for b in v.support), default=1)


def h_contains(lam: LambdaSeq, i: int, v: FinVec) -> bool:
    if i < 1:
        raise ValueError(f"Chain level must be >= 1, got {i}")
    return all(basis_entry_index(lam, b) <= i for b in v.support)


def h_residue_hits(lam: LambdaSeq, i: int, period: int) -> frozenset[int]:
    """Residues mod ``period`` met by the generators of H_{lambda,i}."""
    return frozenset(b.index % period for b in h_gens(lam, i).gens)


@dataclass(frozen=True)
class NormalN:
    """N_m: vectors whose combined e+f coefficient sum vanishes on every residue class mod m.

    ``residue`` is the map V -> F2^m with kernel N_m; its image of e_i and of f_i
    is the unit vector at i mod m, so N_m has index 2^m and contains every e_i + f_i.
    """

    period: int

    def __post_init__(self) -> None:
        if self.period < 1:
            raise ValueError(f"Period must be >= 1, got {self.period}")

    def residue(self, v: FinVec) -> tuple[int, ...]:
        out = [0] * self.period
        for b in v.support:
            out[b.index % self.period] ^= 1
        return tuple(out)

    def contains(self, v: FinVec) -> bool:
        return not any(self.residue(v))

    def index(self) -> int:
        return 2**self.period

    def coset_key(self, v: FinVec, hits: Iterable[int]) -> tuple[int, ...]:
        """Class of v in V / N*H where H meets the residues ``hits``."""
        hit = set(hits)
        rho = self.residue(v)
        return tuple(rho[j] for j in range(self.period) if j not in hit)

    def stable_level(self) -> int:
        """From this level on N*H_{lambda,i} = V for every lambda."""
        return max(self.period - 1, 1)


def nh_contains(lam: LambdaSeq, i: int, n: NormalN, v: FinVec) -> bool:
    """v in N*H_{lambda,i}."""
    return not any(n.coset_key(v, h_residue_hits(lam, i, n.period)))


def nh_equal(gamma: LambdaSeq, beta: LambdaSeq, n: NormalN, i: int) -> bool:
    """N*H_{gamma,i} = N*H_{beta,i}, compared through the residue images."""
    return h_residue_hits(gamma, i, n.period) == h_residue_hits(beta, i, n.period)


def conjugator(alpha: LambdaSeq, beta: LambdaSeq, n: int) -> GElem:
    """g(alpha, beta, n): the product of a_m over m >= 1 with alpha(m) != beta(m), 2m - 1 <= n.

    Conjugation by g carries H_{alpha,i} onto H_{beta,i} for i <= n. ``n = 0``
    gives the identity.
    """
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    invs = frozenset(m for m in range(1, (n + 1) // 2 + 1) if alpha.bit(m) != beta.bit(m))
    return GElem(q=QElem(invs))


def translate_sequence(alpha: LambdaSeq, g: GElem) -> LambdaSeq:
    """The sequence gamma with H_{gamma,i} = H_{alpha,i}^g for every i.

    ``g`` must be a product of distinct a_m with m >= 1, as returned by ``conjugator``.
    """
    if g.v or g.q.shift or any(m < 1 for m in g.q.invs):
        raise ValueError(f"{g} is not a product of a_m with m >= 1")
    gamma = alpha
    for m in sorted(g.q.invs):
        gamma = gamma.with_bit(m, 1 - alpha.bit(m))
    return gamma


def gamma_sequence(alpha: LambdaSeq, beta: LambdaSeq, n: int) -> LambdaSeq:
    """gamma with H_{gamma,i} = H_{alpha,i}^{g(alpha, beta, n)} for all i."""
    return translate_sequence(alpha, conjugator(alpha, beta, n))


def conjugate_gens(h: HSub, g: GElem) -> frozenset[BasisVec]:
    """Generators of H^g; g acts on pure vectors through its <a, t> part."""
    return frozenset(g.q.act_basis(b) for b in h.gens)


def union_radius_ok(lam: LambdaSeq, radius: int, max_level: int) -> bool:
    """Every e_i, f_i with |i| <= radius lies in H_{lambda,max_level}."""
    top = h_gens(lam, max_level)
    return all(
        b in top.gens for i in range(-radius, radius + 1) for b in (e(i), f(i))
    )


__all__ = [
    "HSub",
    "NormalN",
    "basis_entry_index",
    "c_vector",
    "conjugate_gens",
    "conjugator",
    "gamma_sequence",
    "h_contains",
    "h_entry_index",
    "h_gens",
    "h_residue_hits",
    "nh_contains",
    "nh_equal",
    "prime",
    "prime_index_above",
    "prime_product",
    "translate_sequence",
    "union_radius_ok",
]
