"""Iterated wreath products of Alt(5) and the generators xi, eta, a, b.

Spine convention: the distinguished path is 1, 11, 111, ...; a directed
automorphism stabilizes level 1, its section at vertex ``1`` is the directed
automorphism of the shifted sequence and its section at vertex ``2`` is the
rooted automorphism given by the first sequence entry. Hence entry ``k >= 1``
of the sequence is the label at vertex ``1^(k-1) 2``. The rooted generators
xi, eta read index 0 of the 0/1 sequence; a, b read indices 1, 2, ...
"""

from __future__ import annotations

import math
from collections.abc import Callable, Iterable
from dataclasses import dataclass
from functools import cache, reduce
from typing import Final

from ..permkernel import GenSet, Perm, perm_order, perm_parse
from ..sequences import LambdaSeq
from .portrait import ARITY, Portrait, to_perm

ALPHA: Final[Perm] = perm_parse("(1 2 3)", ARITY)
BETA: Final[Perm] = perm_parse("(1 2 3 4 5)", ARITY)

PermSequence = Callable[[int], Perm]


@dataclass(frozen=True)
class WreathSpec:
    """Arity, top group generators and exponent of the Alt(5) instance."""

    arity: int = ARITY
    alpha: Perm = ALPHA
    beta: Perm = BETA
    exponent: int = 30


ALT5_SPEC: Final[WreathSpec] = WreathSpec()


def distinguished_vertex(k: int) -> str:
    """Vertex carrying sequence entry ``k``: the root for k = 0, else ``1^(k-1) 2``."""
    return "" if k == 0 else "1" * (k - 1) + "2"


def rooted_aut(sigma: Perm, depth: int) -> Portrait:
    """Permute the five principal subtrees bodily by ``sigma``."""
    if depth < 1:
        raise ValueError("Rooted automorphisms need depth >= 1")
    return Portrait(depth=depth, labels={"": sigma})


def shift(seq: PermSequence) -> PermSequence:
    return lambda k: seq(k + 1)


def directed_aut(seq: PermSequence, depth: int) -> Portrait:
    """Directed automorphism along the spine ``1^k`` with active sibling 2."""
    if depth < 1:
        raise ValueError("Directed automorphisms need depth >= 1")
    return Portrait(
        depth=depth,
        labels={distinguished_vertex(k): seq(k) for k in range(1, depth)},
    )


def alpha_sequence(lam: LambdaSeq, spec: WreathSpec = ALT5_SPEC) -> PermSequence:
    """k -> alpha_k: alpha when lambda_k = 0, beta otherwise."""
    return lambda k: spec.beta if lam.bit(k) else spec.alpha


def beta_sequence(lam: LambdaSeq, spec: WreathSpec = ALT5_SPEC) -> PermSequence:
    """k -> beta_k: beta when lambda_k = 0, alpha otherwise."""
    return lambda k: spec.alpha if lam.bit(k) else spec.beta


@dataclass(frozen=True)
class GammaPortraits:
    xi: Portrait
    eta: Portrait
    a: Portrait
    b: Portrait

    def as_perms(self) -> tuple[Perm, Perm, Perm, Perm]:
        return (to_perm(self.xi), to_perm(self.eta), to_perm(self.a), to_perm(self.b))


def gamma_portraits(lam: LambdaSeq, depth: int) -> GammaPortraits:
    alphas = alpha_sequence(lam)
    betas = beta_sequence(lam)
    return GammaPortraits(
        xi=rooted_aut(alphas(0), depth),
        eta=rooted_aut(betas(0), depth),
        a=directed_aut(alphas, depth),
        b=directed_aut(betas, depth),
    )


def gamma_generators(lam: LambdaSeq, depth: int) -> tuple[Perm, Perm, Perm, Perm]:
    """xi(lambda), eta(lambda), a(lambda), b(lambda) acting on the 5**depth leaves."""
    return gamma_portraits(lam, depth).as_perms()


def gamma_genset(lam: LambdaSeq, depth: int) -> GenSet:
    return GenSet(degree=ARITY**depth, gens=gamma_generators(lam, depth))


@cache
def wreath_order(depth: int) -> int:
    """|W_n| = 60 ** ((5**n - 1) / 4) for W_n acting on 5**n points."""
    if depth < 0:
        raise ValueError("Depth must be non-negative")
    return 60 ** ((ARITY**depth - 1) // (ARITY - 1))


def wreath_portraits(depth: int, spec: WreathSpec = ALT5_SPEC) -> tuple[Portrait, ...]:
    """Generators of W_n: alpha and beta placed at the vertex ``1^k`` for each level k."""
    gens: list[Portrait] = []
    for k in range(depth):
        for sigma in (spec.alpha, spec.beta):
            gens.append(Portrait(depth=depth, labels={"1" * k: sigma}))
    return tuple(gens)


def wreath_generators(depth: int) -> GenSet:
    return GenSet(
        degree=ARITY**depth, gens=tuple(to_perm(p) for p in wreath_portraits(depth))
    )


def exponent_of(elements: Iterable[Perm]) -> int:
    """lcm of the element orders."""
    return reduce(math.lcm, (perm_order(x) for x in elements), 1)
