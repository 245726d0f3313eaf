"""Decidable membership in J_lambda, (V-1)ZG and I_lambda = J_lambda + (N-1)ZG.

u_i generates the permutation module U_i = F_{p_i}[H_{lambda,i} \\ G], so u_i * r
vanishes iff every right coset class of the support of r carries a coefficient
sum divisible by p_i. J_lambda is the intersection over all i of these
annihilators; the oracle reduces "for all i" to finitely many levels:

- from ``h_entry_index`` of the in-class vector differences on, the H-coset
  partition of the support is the V-coset partition (same <a,t> part);
- on that partition the sums vanish mod every p_i iff they vanish as integers,
  which is the (V-1)ZG test.

The modules themselves are never built.
"""

from __future__ import annotations

from collections.abc import Callable, Hashable
from dataclasses import dataclass

from loguru import logger

from ..errors import MembershipError
from ..metrics import inc_membership_queries, inc_oracle_levels
from ..sequences import LambdaSeq
from .chains import (
    NormalN,
    basis_entry_index,
    h_contains,
    h_entry_index,
    h_residue_hits,
    nh_contains,
    prime,
    prime_index_above,
    prime_product,
)
from .group import BasisVec, FinVec, GElem, g_inv, g_mul
from .ring import RingElem


@dataclass(frozen=True)
class Witness:
    """A coset class of the support whose coefficient sum is nonzero mod p_level."""

    level: int
    prime: int
    representative: GElem
    total: int

    @property
    def residue(self) -> int:
        return self.total % self.prime

    def as_details(self) -> dict[str, object]:
        return {
            "level": self.level,
            "prime": self.prime,
            "coset": str(self.representative),
            "sum": self.total,
            "sum_mod_p": self.residue,
        }


@dataclass(frozen=True)
class Membership:
    """Answer of ``in_J``/``in_I``; ``witness`` is set exactly when ``member`` is False."""

    member: bool
    levels_checked: int
    witness: Witness | None = None

    def __bool__(self) -> bool:
        return self.member


ClassKey = Callable[[GElem], Hashable]


def _h_key(lam: LambdaSeq, i: int) -> ClassKey:
    def key(g: GElem) -> Hashable:
        outside = frozenset(b for b in g.v.support if basis_entry_index(lam, b) > i)
        return (g.q, outside)

    return key


def _nh_key(lam: LambdaSeq, i: int, n: NormalN) -> ClassKey:
    hits = h_residue_hits(lam, i, n.period)

    def key(g: GElem) -> Hashable:
        return (g.q, n.coset_key(g.v, hits))

    return key


def _v_key(g: GElem) -> Hashable:
    return g.q


def _class_sums(r: RingElem, key: ClassKey) -> dict[Hashable, tuple[GElem, int]]:
    """key -> (least representative, integer coefficient sum)."""
    out: dict[Hashable, tuple[GElem, int]] = {}
    for g, c in r.terms.items():
        k = key(g)
        rep, total = out.get(k, (g, 0))
        out[k] = (rep, total + c)
    return out


def coset_eq(
    lam: LambdaSeq, i: int, g: GElem, g2: GElem, n: NormalN | None = None
) -> bool:
    """H g = H g' with H = H_{lambda,i} (or N*H_{lambda,i} when ``n`` is given)."""
    if i < 1:
        raise ValueError(f"Chain level must be >= 1, got {i}")
    d = g_mul(g, g_inv(g2))
    if not d.in_v():
        return False
    if n is None:
        return h_contains(lam, i, d.v)
    return nh_contains(lam, i, n, d.v)


def eval_u(lam: LambdaSeq, i: int, r: RingElem, n: NormalN | None = None) -> Witness | None:
    """u_i * r in U_i (or U_i / U_i(N-1)); None when it is zero.

    A nonzero value is reported through the class with the least representative
    among those whose sum is nonzero mod p_i.
    """
    if i < 1:
        raise ValueError(f"Chain level must be >= 1, got {i}")
    inc_oracle_levels()
    p = prime(i)
    key = _h_key(lam, i) if n is None else _nh_key(lam, i, n)
    bad = [(rep, total) for rep, total in _class_sums(r, key).values() if total % p]
    if not bad:
        return None
    rep, total = min(bad, key=lambda item: item[0].sort_key())
    return Witness(level=i, prime=p, representative=rep, total=total)


def in_V_ideal(r: RingElem) -> bool:
    """r in (V-1)ZG: every right V-coset class has integer coefficient sum 0."""
    return all(total == 0 for _, total in _class_sums(r, _v_key).values())


def support_level(lam: LambdaSeq, r: RingElem) -> int:
    """Level from which the H_{lambda,i}-coset partition of the support is the V-partition."""
    reps: dict[object, FinVec] = {}
    level = 1
    for g in r.terms:
        base = reps.setdefault(g.q, g.v)
        level = max(level, h_entry_index(lam, g.v + base))
    return level


def truncation_bound(lam: LambdaSeq, r: RingElem, n: NormalN | None = None) -> int:
    """i_max = max(support level, least i with p_i > sum |coefficients|, 1).

    Beyond i_max, eval_u is zero iff every V-class sum is zero. With ``n`` the
    bound also reaches the level from which N*H_{lambda,i} = V.
    """
    bound = max(support_level(lam, r), prime_index_above(r.norm1()), 1)
    return bound if n is None else max(bound, n.stable_level())


def _first_failure(
    lam: LambdaSeq, r: RingElem, explicit: int, n: NormalN | None
) -> Witness | None:
    """Least failing level: levels 1..explicit directly, then on the stable V-partition."""
    for i in range(1, explicit + 1):
        w = eval_u(lam, i, r, n)
        if w is not None:
            return w
    sums = _class_sums(r, _v_key)
    if all(total == 0 for _, total in sums.values()):
        return None
    # some integer sum is nonzero; it is divisible by only finitely many primes
    i = explicit + 1
    while True:
        inc_oracle_levels()
        p = prime(i)
        bad = [(rep, total) for rep, total in sums.values() if total % p]
        if bad:
            rep, total = min(bad, key=lambda item: item[0].sort_key())
            return Witness(level=i, prime=p, representative=rep, total=total)
        i += 1


def in_J(lam: LambdaSeq, r: RingElem) -> Membership:
    """Exact membership r in J_lambda, with the least failing level as witness."""
    inc_membership_queries()
    explicit = support_level(lam, r)
    w = _first_failure(lam, r, explicit, None)
    return Membership(member=w is None, levels_checked=explicit, witness=w)


def in_I(lam: LambdaSeq, n: NormalN, r: RingElem) -> Membership:
    """Exact membership r in J_lambda + (N-1)ZG.

    Levels up to max(support level, m - 1) are evaluated in U_i / U_i(N-1); from
    level m - 1 on N*H_{lambda,i} = V and the V-class test decides the rest.
    """
    inc_membership_queries()
    explicit = max(support_level(lam, r), n.stable_level())
    w = _first_failure(lam, r, explicit, n)
    return Membership(member=w is None, levels_checked=explicit, witness=w)


def brute_force_in_J(lam: LambdaSeq, r: RingElem, upto: int) -> bool:
    """eval_u is zero at every level 1..upto."""
    return all(eval_u(lam, i, r) is None for i in range(1, upto + 1))


def brute_force_in_I(lam: LambdaSeq, n: NormalN, r: RingElem, upto: int) -> bool:
    """eval_u modulo N is zero at every level 1..upto."""
    return all(eval_u(lam, i, r, n) is None for i in range(1, upto + 1))


def residual_witness(lam: LambdaSeq, r: RingElem) -> Witness:
    """Least level i and coset class where u_i * r is nonzero.

    Raises:
        MembershipError: if r lies in J_lambda.
    """
    result = in_J(lam, r)
    if result.witness is None:
        raise MembershipError(f"{r} lies in J_{lam}; no residual witness exists")
    return result.witness


def decode_element(n: int) -> RingElem:
    """(p_1 ... p_{2n-2}) (e_n - 1)."""
    if n < 1:
        raise ValueError(f"Bit index must be >= 1, got {n}")
    e_n = GElem(v=FinVec.of(BasisVec(n, "e")))
    return RingElem.minus_one(e_n) * prime_product(2 * n - 2)


def decode_bit(lam: LambdaSeq, n: int) -> int:
    """0 iff (p_1 ... p_{2n-2})(e_n - 1) lies in J_lambda."""
    return 0 if in_J(lam, decode_element(n)) else 1


def decode_prefix(lam: LambdaSeq, length: int) -> str:
    if length < 1:
        raise ValueError(f"Prefix length must be >= 1, got {length}")
    bits = "".join(str(decode_bit(lam, n)) for n in range(1, length + 1))
    logger.debug("Decoded {} bits of {}: {}", length, lam, bits)
    return bits


__all__ = [
    "Membership",
    "Witness",
    "brute_force_in_I",
    "brute_force_in_J",
    "coset_eq",
    "decode_bit",
    "decode_element",
    "decode_prefix",
    "eval_u",
    "in_I",
    "in_J",
    "in_V_ideal",
    "residual_witness",
    "support_level",
    "truncation_bound",
]
