"""Permutations of finite degree acting on points 1..degree.

Points act on the right and products are read left to right: in
``perm_compose(p, q)`` the permutation ``p`` is applied first. Internally a
permutation is stored in array form on 0..degree-1.
"""

from __future__ import annotations

import math
import re
from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from functools import reduce
from typing import Final

from ..errors import DegreeMismatchError, PermParseError

_CYCLE_RE: Final = re.compile(r"\(([^()]*)\)")


@dataclass(frozen=True)
class Perm:
    """A bijection of {1..degree}; ``arr[i]`` is the 0-based image of point ``i + 1``."""

    arr: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.arr) == 0:
            raise PermParseError("Permutation degree must be positive")
        if sorted(self.arr) != list(range(len(self.arr))):
            raise PermParseError(f"Not a bijection: {self.arr}")

    @classmethod
    def identity(cls, degree: int) -> Perm:
        return cls(tuple(range(degree)))

    @classmethod
    def from_images(cls, images: Sequence[int]) -> Perm:
        """Build from 1-based images: ``images[i - 1]`` is the image of point ``i``."""
        return cls(tuple(x - 1 for x in images))

    @classmethod
    def from_cycles(cls, degree: int, cycles: Iterable[Sequence[int]]) -> Perm:
        """Product, left to right, of 1-based cycles acting on ``degree`` points."""
        out = cls.identity(degree)
        for cycle in cycles:
            out = perm_compose(out, _cycle_perm(degree, cycle))
        return out

    @property
    def degree(self) -> int:
        return len(self.arr)

    def image(self, point: int) -> int:
        """Image of the 1-based ``point``."""
        return self.arr[point - 1] + 1

    @property
    def images(self) -> dict[int, int]:
        return {i + 1: j + 1 for i, j in enumerate(self.arr)}

    def is_identity(self) -> bool:
        return all(i == j for i, j in enumerate(self.arr))

    def cycles(self) -> list[tuple[int, ...]]:
        """Nontrivial cycles, each starting at its least point, ordered by that point."""
        seen: set[int] = set()
        out: list[tuple[int, ...]] = []
        for start in range(self.degree):
            if start in seen or self.arr[start] == start:
                continue
            cycle = [start]
            seen.add(start)
            j = self.arr[start]
            while j != start:
                seen.add(j)
                cycle.append(j)
                j = self.arr[j]
            out.append(tuple(x + 1 for x in cycle))
        return out

    def __mul__(self, other: Perm) -> Perm:
        return perm_compose(self, other)

    def __pow__(self, k: int) -> Perm:
        return perm_power(self, k)

    def __invert__(self) -> Perm:
        return perm_inverse(self)

    def __str__(self) -> str:
        return perm_format(self)


@dataclass(frozen=True)
class GenSet:
    """A list of generators sharing one degree."""

    degree: int
    gens: tuple[Perm, ...]

    def __post_init__(self) -> None:
        if self.degree <= 0:
            raise DegreeMismatchError("GenSet degree must be positive")
        for g in self.gens:
            if g.degree != self.degree:
                raise DegreeMismatchError(
                    f"Generator of degree {g.degree} in GenSet of degree {self.degree}"
                )

    @classmethod
    def of(cls, *gens: Perm, degree: int | None = None) -> GenSet:
        if degree is None:
            if not gens:
                raise DegreeMismatchError("Cannot infer degree of an empty GenSet")
            degree = gens[0].degree
        return cls(degree=degree, gens=tuple(gens))

    def __iter__(self):  # type: ignore[no-untyped-def]
        return iter(self.gens)

    def __len__(self) -> int:
        return len(self.gens)


def _check_degrees(p: Perm, q: Perm) -> None:
    if p.degree != q.degree:
        raise DegreeMismatchError(f"Degree mismatch: {p.degree} vs {q.degree}")


def _cycle_perm(degree: int, cycle: Sequence[int]) -> Perm:
    arr = list(range(degree))
    pts = [x - 1 for x in cycle]
    if len(set(pts)) != len(pts):
        raise PermParseError(f"Repeated point in cycle {tuple(cycle)}")
    for x in pts:
        if not 0 <= x < degree:
            raise PermParseError(f"Point {x + 1} outside 1..{degree}")
    for i, j in zip(pts, pts[1:], strict=False):
        arr[i] = j
    if pts:
        arr[pts[-1]] = pts[0]
    return Perm(tuple(arr))


def perm_compose(p: Perm, q: Perm) -> Perm:
    """Apply ``p`` first, then ``q``: (x)(pq) = ((x)p)q."""
    _check_degrees(p, q)
    return Perm(tuple(map(q.arr.__getitem__, p.arr)))


def perm_inverse(p: Perm) -> Perm:
    inv = [0] * p.degree
    for i, j in enumerate(p.arr):
        inv[j] = i
    return Perm(tuple(inv))


def perm_power(p: Perm, k: int) -> Perm:
    """``p`` to the integer power ``k`` (square-and-multiply)."""
    if k < 0:
        return perm_power(perm_inverse(p), -k)
    result = Perm.identity(p.degree)
    base = p
    while k:
        if k & 1:
            result = perm_compose(result, base)
        base = perm_compose(base, base)
        k >>= 1
    return result


def perm_order(p: Perm) -> int:
    """Least k >= 1 with p^k = identity: the lcm of the cycle lengths."""
    return reduce(math.lcm, (len(c) for c in p.cycles()), 1)


def perm_conjugate(p: Perm, g: Perm) -> Perm:
    """g^-1 p g."""
    return perm_compose(perm_compose(perm_inverse(g), p), g)


def perm_commutator(p: Perm, q: Perm) -> Perm:
    """p^-1 q^-1 p q."""
    return perm_compose(
        perm_compose(perm_inverse(p), perm_inverse(q)), perm_compose(p, q)
    )


def is_even(p: Perm) -> bool:
    return sum(len(c) - 1 for c in p.cycles()) % 2 == 0


def perm_format(p: Perm) -> str:
    """Cycle notation with space-separated points; the identity prints as ``()``."""
    cycles = p.cycles()
    if not cycles:
        return "()"
    return "".join("(" + " ".join(map(str, c)) + ")" for c in cycles)


def perm_parse(text: str, degree: int | None = None) -> Perm:
    """Parse cycle notation such as ``"(1 2 3)(4 5)"``.

    Cycles are whitespace- or comma-separated lists of 1-based points and are
    multiplied left to right. ``degree`` defaults to the largest point mentioned.
    """
    stripped = text.strip()
    if not stripped:
        raise PermParseError("Empty permutation text")
    leftover = _CYCLE_RE.sub("", stripped).strip()
    if leftover:
        raise PermParseError(f"Could not parse permutation {text!r}")
    cycles: list[list[int]] = []
    for body in _CYCLE_RE.findall(stripped):
        tokens = body.replace(",", " ").split()
        try:
            cycles.append([int(tok) for tok in tokens])
        except ValueError:
            raise PermParseError(f"Non-integer point in {text!r}") from None
    largest = max((max(c) for c in cycles if c), default=1)
    if degree is None:
        degree = largest
    if largest > degree:
        raise PermParseError(f"Point {largest} exceeds degree {degree}")
    return Perm.from_cycles(degree, [c for c in cycles if c])
