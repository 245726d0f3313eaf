"""Closure computations: normal closures, derived subgroups, k-transitivity."""

from __future__ import annotations

import math
from collections import deque
from collections.abc import Iterable, Sequence
from itertools import combinations

from loguru import logger

from ..budget import Budget
from ..errors import DegreeMismatchError
from .chain import Arr, _inv, _mul, bsgs_build, bsgs_order, chain_builder
from .perm import GenSet, Perm, perm_commutator


def _require_degree(degree: int, perms: Iterable[Perm]) -> None:
    for p in perms:
        if p.degree != degree:
            raise DegreeMismatchError(f"Expected degree {degree}, got {p.degree}")


def normal_closure(
    g: GenSet, seeds: Sequence[Perm], *, budget: Budget | None = None
) -> GenSet:
    """Generators of the smallest subgroup containing ``seeds`` normalized by ``g``.

    Conjugates ``x^-1 h x`` of the current generators by the generators of ``g``
    are added whenever they are not yet members, until no conjugate escapes.
    """
    _require_degree(g.degree, seeds)
    builder = chain_builder(g.degree, budget)
    queue: deque[Arr] = deque(builder.extend(s.arr for s in seeds))
    closure: list[Arr] = list(queue)
    conj = [(_inv(x.arr), x.arr) for x in g.gens]
    while queue:
        h = queue.popleft()
        for x_inv, x in conj:
            c = _mul(_mul(x_inv, h), x)
            if builder.extend([c]):
                closure.append(c)
                queue.append(c)
        if budget is not None:
            budget.check(achieved=builder.order())
    logger.debug("Normal closure: {} generators, order {}", len(closure), builder.order())
    return GenSet(degree=g.degree, gens=tuple(Perm(c) for c in closure))


def derived_subgroup(g: GenSet, *, budget: Budget | None = None) -> GenSet:
    """Commutator subgroup: normal closure of the commutators of generator pairs."""
    commutators = [perm_commutator(x, y) for x, y in combinations(g.gens, 2)]
    return normal_closure(g, commutators, budget=budget)


def is_perfect(g: GenSet) -> bool:
    return bsgs_order(bsgs_build(derived_subgroup(g))) == bsgs_order(bsgs_build(g))


def is_k_transitive(g: GenSet, k: int) -> bool:
    """True iff the action on ordered k-tuples of distinct points is transitive."""
    n = g.degree
    if k < 1 or k > n:
        raise ValueError(f"k must lie in 1..{n}, got {k}")
    target = math.perm(n, k)
    start = tuple(range(k))
    seen = {start}
    frontier = [start]
    while frontier:
        tup = frontier.pop()
        for x in g.gens:
            img = tuple(x.arr[i] for i in tup)
            if img not in seen:
                seen.add(img)
                frontier.append(img)
    return len(seen) == target


def orbit(g: GenSet, point: int) -> frozenset[int]:
    """Orbit of the 1-based ``point``."""
    seen = {point - 1}
    frontier = [point - 1]
    while frontier:
        beta = frontier.pop()
        for x in g.gens:
            img = x.arr[beta]
            if img not in seen:
                seen.add(img)
                frontier.append(img)
    return frozenset(b + 1 for b in seen)


def brute_force_closure(g: GenSet, *, limit: int = 100_000) -> frozenset[Perm]:
    """Every element of the generated group, by breadth-first word search.

    Raises:
        ValueError: if more than ``limit`` elements are found.
    """
    identity = tuple(range(g.degree))
    seen: set[Arr] = {identity}
    frontier = [identity]
    gens = [x.arr for x in g.gens]
    while frontier:
        h = frontier.pop()
        for x in gens:
            c = _mul(h, x)
            if c not in seen:
                seen.add(c)
                if len(seen) > limit:
                    raise ValueError(f"Closure exceeds {limit} elements")
                frontier.append(c)
    return frozenset(Perm(a) for a in seen)
