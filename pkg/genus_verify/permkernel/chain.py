"""Stabilizer chains (base and strong generating sets) via Schreier-Sims.

The deterministic incremental Schreier-Sims algorithm is the reference: every
Schreier generator of every level is sifted through the levels below it, so
the finished chain is complete and orders/memberships are exact.

A seeded randomized phase (product-replacement random elements, sifted and
added as strong generators) may run first. Its chain is then either certified
by reaching a supplied upper bound on the order, or completed by the
deterministic algorithm, so both paths give identical answers.
"""

from __future__ import annotations

import random
from collections.abc import Iterable, Mapping, Sequence
from dataclasses import dataclass

from loguru import logger

from ..budget import Budget
from ..errors import DegreeMismatchError
from ..metrics import (
    inc_base_points,
    inc_membership_queries,
    inc_schreier_generators,
    inc_sifts,
)
from .perm import GenSet, Perm

Arr = tuple[int, ...]


def _mul(a: Arr, b: Arr) -> Arr:
    return tuple(map(b.__getitem__, a))


def _inv(a: Arr) -> Arr:
    out = [0] * len(a)
    for i, j in enumerate(a):
        out[j] = i
    return tuple(out)


def _first_moved(a: Arr) -> int:
    for i, j in enumerate(a):
        if i != j:
            return i
    raise ValueError("identity moves no point")


@dataclass(frozen=True)
class ChainLevel:
    """One level of a stabilizer chain.

    ``transversal`` maps each orbit point (0-based) to a coset representative
    sending the base point to it; ``inverses`` holds their inverses.
    """

    base_point: int
    transversal: Mapping[int, Arr]
    inverses: Mapping[int, Arr]
    strong_gens: tuple[Arr, ...]

    @property
    def orbit_size(self) -> int:
        return len(self.transversal)

    def representative(self, point: int) -> Perm:
        """Coset representative (as a Perm) for the 1-based orbit ``point``."""
        return Perm(self.transversal[point - 1])


@dataclass(frozen=True)
class StabilizerChain:
    degree: int
    levels: tuple[ChainLevel, ...]

    @property
    def base(self) -> tuple[int, ...]:
        """Base points, 1-based."""
        return tuple(level.base_point + 1 for level in self.levels)

    @property
    def strong_generators(self) -> tuple[Perm, ...]:
        seen: dict[Arr, None] = {}
        for level in self.levels:
            for g in level.strong_gens:
                seen.setdefault(g, None)
        return tuple(Perm(g) for g in seen)

    @property
    def orbit_sizes(self) -> tuple[int, ...]:
        return tuple(level.orbit_size for level in self.levels)


class _ChainBuilder:
    """Mutable Schreier-Sims state; frozen into a ``StabilizerChain`` when done."""

    def __init__(self, degree: int, budget: Budget | None = None) -> None:
        self.degree = degree
        self.identity: Arr = tuple(range(degree))
        self.budget = budget
        self.base: list[int] = []
        self.level_gens: list[list[Arr]] = []
        self.transversal: list[dict[int, Arr]] = []
        self.inverses: list[dict[int, Arr]] = []
        # (orbit point, generator index) pairs whose Schreier generator is known to lie
        # in the group generated by the next level.
        self.checked: list[set[tuple[int, int]]] = []

    # -- structure -----------------------------------------------------------------

    def _append_level(self, point: int) -> None:
        self.base.append(point)
        self.level_gens.append([])
        self.transversal.append({point: self.identity})
        self.inverses.append({point: self.identity})
        self.checked.append(set())
        inc_base_points()
        logger.debug("Base extended with point {} (length {})", point + 1, len(self.base))

    def _add_to_level(self, level: int, gen: Arr) -> None:
        gens = self.level_gens[level]
        gens.append(gen)
        trans = self.transversal[level]
        inv = self.inverses[level]
        frontier: list[int] = []
        for beta in list(trans):
            img = gen[beta]
            if img not in trans:
                rep = _mul(trans[beta], gen)
                trans[img] = rep
                inv[img] = _inv(rep)
                frontier.append(img)
        while frontier:
            beta = frontier.pop()
            for g in gens:
                img = g[beta]
                if img not in trans:
                    rep = _mul(trans[beta], g)
                    trans[img] = rep
                    inv[img] = _inv(rep)
                    frontier.append(img)

    def strip(self, h: Arr, start: int = 0) -> tuple[Arr, int]:
        """Sift ``h`` from level ``start``; return the residue and the level reached."""
        inc_sifts()
        for level in range(start, len(self.base)):
            beta = h[self.base[level]]
            reps = self.inverses[level]
            if beta not in reps:
                return h, level
            h = _mul(h, reps[beta])
        return h, len(self.base)

    def contains(self, h: Arr) -> bool:
        residue, _ = self.strip(h)
        return residue == self.identity

    def order(self) -> int:
        total = 1
        for trans in self.transversal:
            total *= len(trans)
        return total

    def _insert(self, gen: Arr) -> int:
        """Add ``gen`` to every level whose base prefix it fixes; return the deepest."""
        j = 0
        while j < len(self.base) and gen[self.base[j]] == self.base[j]:
            j += 1
        if j == len(self.base):
            self._append_level(_first_moved(gen))
        for level in range(j + 1):
            self._add_to_level(level, gen)
        return j

    # -- Schreier-Sims -------------------------------------------------------------

    def _check_level(self, i: int) -> int | None:
        trans = self.transversal[i]
        inv = self.inverses[i]
        gens = self.level_gens[i]
        checked = self.checked[i]
        for beta in list(trans):
            u = trans[beta]
            for gi, x in enumerate(gens):
                if (beta, gi) in checked:
                    continue
                checked.add((beta, gi))
                inc_schreier_generators()
                h = _mul(_mul(u, x), inv[x[beta]])
                if h == self.identity:
                    continue
                residue, j = self.strip(h, i + 1)
                if j == len(self.base) and residue == self.identity:
                    continue
                if j == len(self.base):
                    self._append_level(_first_moved(residue))
                for level in range(i + 1, j + 1):
                    self._add_to_level(level, residue)
                return j
        return None

    def complete(self) -> None:
        """Run Schreier-Sims from the deepest level until every level is verified."""
        i = len(self.base) - 1
        while i >= 0:
            if self.budget is not None:
                self.budget.check(achieved=self.order())
            jump = self._check_level(i)
            i = i - 1 if jump is None else jump

    def extend(self, gens: Iterable[Arr]) -> list[Arr]:
        """Add generators one at a time, keeping the chain complete.

        Returns the generators that were not already members.
        """
        added: list[Arr] = []
        for g in gens:
            if g == self.identity or self.contains(g):
                continue
            self._insert(g)
            self.complete()
            added.append(g)
        return added

    # -- randomized phase ----------------------------------------------------------

    def random_phase(
        self,
        gens: Sequence[Arr],
        rng: random.Random,
        *,
        known_order: int | None,
        exit_rounds: int,
    ) -> bool:
        """Sift product-replacement random elements; return True if ``known_order`` is met."""
        sampler = _ProductReplacement(gens, rng)
        for g in gens:
            if g != self.identity and not self._sifts_through(g):
                self._insert(g)
        quiet = 0
        while quiet < exit_rounds:
            if known_order is not None and self.order() >= known_order:
                return True
            if self.budget is not None:
                self.budget.check(achieved=self.order())
            residue, j = self.strip(sampler.sample())
            if j == len(self.base) and residue == self.identity:
                quiet += 1
                continue
            quiet = 0
            if j == len(self.base):
                self._append_level(_first_moved(residue))
            for level in range(j + 1):
                if level < len(self.base):
                    self._add_to_level(level, residue)
        return known_order is not None and self.order() >= known_order

    def _sifts_through(self, g: Arr) -> bool:
        residue, j = self.strip(g)
        return j == len(self.base) and residue == self.identity

    def freeze(self) -> StabilizerChain:
        levels = tuple(
            ChainLevel(
                base_point=self.base[i],
                transversal=dict(self.transversal[i]),
                inverses=dict(self.inverses[i]),
                strong_gens=tuple(self.level_gens[i]),
            )
            for i in range(len(self.base))
        )
        return StabilizerChain(degree=self.degree, levels=levels)


class _ProductReplacement:
    """Approximately uniform random elements by product replacement ("rattle")."""

    def __init__(self, gens: Sequence[Arr], rng: random.Random, *, extra: int = 5) -> None:
        degree = len(gens[0])
        identity = tuple(range(degree))
        self.rng = rng
        self.slots: list[Arr] = [identity] * extra + list(gens)
        self.accu: Arr = identity
        for _ in range(max(30, 4 * len(gens))):
            self._stir()

    def _stir(self) -> Arr:
        i = self.rng.randrange(len(self.slots))
        j = self.rng.randrange(len(self.slots) - 1)
        if j >= i:
            j += 1
        other = self.slots[j]
        if self.rng.randrange(2):
            other = _inv(other)
        self.slots[i] = _mul(self.slots[i], other)
        self.accu = _mul(self.accu, self.slots[i])
        return self.accu

    def sample(self) -> Arr:
        return self._stir()


def _builder_for(g: GenSet, budget: Budget | None) -> _ChainBuilder:
    if g.degree <= 0:
        raise DegreeMismatchError("Degree must be positive")
    return _ChainBuilder(g.degree, budget)


def bsgs_build(
    g: GenSet,
    *,
    seed: int | None = None,
    known_order: int | None = None,
    exit_rounds: int = 40,
    budget: Budget | None = None,
) -> StabilizerChain:
    """Build a complete stabilizer chain for the group generated by ``g``.

    Args:
        g: Generators.
        seed: When given, run a seeded randomized phase first.
        known_order: Upper bound on the group order (e.g. the order of an
            overgroup). Reaching it certifies the randomized chain.
        exit_rounds: Consecutive trivially-sifting random elements that end the
            randomized phase.
        budget: Optional time budget, polled once per processed level.
    """
    builder = _builder_for(g, budget)
    gens = [p.arr for p in g.gens if not p.is_identity()]
    if seed is not None and gens:
        certified = builder.random_phase(
            gens, random.Random(seed), known_order=known_order, exit_rounds=exit_rounds
        )
        if certified:
            logger.debug("Randomized chain certified by order bound {}", known_order)
            return builder.freeze()
        # Every generator is already a strong generator of level 0; finish deterministically.
        builder.complete()
        return builder.freeze()
    builder.extend(gens)
    return builder.freeze()


def bsgs_order(chain: StabilizerChain) -> int:
    """Product of the basic orbit lengths."""
    total = 1
    for level in chain.levels:
        total *= level.orbit_size
    return total


def _strip(chain: StabilizerChain, h: Arr) -> tuple[Arr, int]:
    inc_sifts()
    for depth, level in enumerate(chain.levels):
        beta = h[level.base_point]
        reps = level.inverses
        if beta not in reps:
            return h, depth
        h = _mul(h, reps[beta])
    return h, len(chain.levels)


def bsgs_contains(chain: StabilizerChain, p: Perm) -> bool:
    """Exact membership test by sifting."""
    if p.degree != chain.degree:
        raise DegreeMismatchError(f"Chain degree {chain.degree} vs permutation {p.degree}")
    inc_membership_queries()
    residue, depth = _strip(chain, p.arr)
    return depth == len(chain.levels) and residue == tuple(range(chain.degree))


def bsgs_random_element(chain: StabilizerChain, rng: random.Random) -> Perm:
    """Uniformly random element: a product of random coset representatives."""
    g: Arr = tuple(range(chain.degree))
    for level in reversed(chain.levels):
        point = rng.choice(sorted(level.transversal))
        g = _mul(g, level.transversal[point])
    return Perm(g)


def chain_builder(degree: int, budget: Budget | None = None) -> _ChainBuilder:
    """Empty incremental builder (used by closure computations)."""
    return _ChainBuilder(degree, budget)
