"""Exact arithmetic in G = V x| <a, t>.

V is the F2-vector space with basis e_i, f_i (i in Z). ``a`` swaps e_0 and f_0,
``t`` shifts indices by +1, so a_i = t^-i a t^i swaps e_i and f_i. Elements of
<a, t> are kept in the normal form A_S t^k with A_S the product of a_i over the
finite set S; elements of G are pairs (v, q) standing for the product v * q.

All actions are right actions: ``v * q`` is the image of v under q, and the
conjugate q^-1 v q of a pure vector equals that image.
"""

from __future__ import annotations

import re
from collections.abc import Iterable, Iterator
from dataclasses import dataclass, field
from typing import Final

from ..errors import RingParseError


@dataclass(frozen=True, order=True, slots=True)
class BasisVec:
    """e_index or f_index, ordered by index, then kind."""

    index: int
    kind: str

    def swapped(self) -> BasisVec:
        return BasisVec(self.index, "f" if self.kind == "e" else "e")

    def __str__(self) -> str:
        return f"{self.kind}{self.index}"


def e(i: int) -> BasisVec:
    return BasisVec(i, "e")


def f(i: int) -> BasisVec:
    return BasisVec(i, "f")


@dataclass(frozen=True)
class FinVec:
    """A vector of V, given by its support."""

    support: frozenset[BasisVec] = frozenset()

    @classmethod
    def of(cls, *basis: BasisVec) -> FinVec:
        out: set[BasisVec] = set()
        for b in basis:
            out ^= {b}
        return cls(frozenset(out))

    def __add__(self, other: FinVec) -> FinVec:
        return FinVec(self.support ^ other.support)

    def __bool__(self) -> bool:
        return bool(self.support)

    def __len__(self) -> int:
        return len(self.support)

    def __iter__(self) -> Iterator[BasisVec]:
        return iter(sorted(self.support))

    def act(self, q: QElem) -> FinVec:
        return FinVec(frozenset(q.act_basis(b) for b in self.support))

    def __mul__(self, q: QElem) -> FinVec:
        return self.act(q)

    def __str__(self) -> str:
        return "+".join(str(b) for b in self) if self.support else "0"


ZERO_VEC: Final[FinVec] = FinVec()


@dataclass(frozen=True)
class QElem:
    """A_S t^k in the lamplighter group <a, t> = C2 wr C_inf."""

    invs: frozenset[int] = field(default_factory=frozenset)
    shift: int = 0

    @classmethod
    def of(cls, invs: Iterable[int] = (), shift: int = 0) -> QElem:
        out: set[int] = set()
        for i in invs:
            out ^= {i}
        return cls(frozenset(out), shift)

    def is_identity(self) -> bool:
        return not self.invs and self.shift == 0

    def act_basis(self, b: BasisVec) -> BasisVec:
        if b.index in self.invs:
            b = b.swapped()
        return BasisVec(b.index + self.shift, b.kind)

    def __mul__(self, other: QElem) -> QElem:
        # t^k a_i t^-k = a_{i-k}
        moved = frozenset(i - self.shift for i in other.invs)
        return QElem(self.invs ^ moved, self.shift + other.shift)

    def inverse(self) -> QElem:
        return QElem(frozenset(i + self.shift for i in self.invs), -self.shift)

    def __invert__(self) -> QElem:
        return self.inverse()

    def sort_key(self) -> tuple[tuple[int, ...], int]:
        return (tuple(sorted(self.invs)), self.shift)


Q_IDENTITY: Final[QElem] = QElem()


@dataclass(frozen=True)
class GElem:
    """The element v * q of G."""

    v: FinVec = ZERO_VEC
    q: QElem = Q_IDENTITY

    @classmethod
    def identity(cls) -> GElem:
        return cls()

    def is_identity(self) -> bool:
        return not self.v and self.q.is_identity()

    def in_v(self) -> bool:
        return self.q.is_identity()

    def __mul__(self, other: GElem) -> GElem:
        if not isinstance(other, GElem):
            return NotImplemented
        return g_mul(self, other)

    def __invert__(self) -> GElem:
        return g_inv(self)

    def __pow__(self, k: int) -> GElem:
        base = self if k >= 0 else g_inv(self)
        result = G_IDENTITY
        for _ in range(abs(k)):
            result = g_mul(result, base)
        return result

    def sort_key(self) -> tuple:
        return (tuple(sorted(self.v.support)), self.q.sort_key())

    def __str__(self) -> str:
        return format_gelem(self)


G_IDENTITY: Final[GElem] = GElem()


def g_mul(x: GElem, y: GElem) -> GElem:
    """(v q)(v' q') = (v + v' q^-1) q q'."""
    return GElem(x.v + y.v.act(x.q.inverse()), x.q * y.q)


def g_inv(x: GElem) -> GElem:
    """(v q)^-1 = (v q) q^-1."""
    return GElem(x.v.act(x.q), x.q.inverse())


def g_conj(x: GElem, g: GElem) -> GElem:
    """g^-1 x g."""
    return g_mul(g_mul(g_inv(g), x), g)


def vec(*basis: BasisVec) -> GElem:
    return GElem(v=FinVec.of(*basis))


def a_elem(i: int = 0) -> GElem:
    """a_i = t^-i a t^i; ``a_elem()`` is a itself."""
    return GElem(q=QElem(frozenset({i})))


def t_elem(k: int = 1) -> GElem:
    return GElem(q=QElem(shift=k))


def q_elem(q: QElem) -> GElem:
    return GElem(q=q)


# -- text format ---------------------------------------------------------------------------

_VEC_ITEM_RE: Final = re.compile(r"^([ef])(-?\d+)$")
_A_ITEM_RE: Final = re.compile(r"^-?\d+$")
_T_RE: Final = re.compile(r"^t(?:\^(-?\d+))?$")
_PART_RE: Final = re.compile(r"v\[[^\]]*\]|a\[[^\]]*\]|t(?:\^-?\d+)?|1")


def format_gelem(x: GElem) -> str:
    """``v[e0+f-2].a[1,3].t^2``; the identity is ``1``."""
    parts: list[str] = []
    if x.v:
        parts.append(f"v[{x.v}]")
    if x.q.invs:
        parts.append("a[" + ",".join(str(i) for i in sorted(x.q.invs)) + "]")
    if x.q.shift:
        parts.append("t" if x.q.shift == 1 else f"t^{x.q.shift}")
    return ".".join(parts) if parts else "1"


def parse_gelem(text: str) -> GElem:
    """Inverse of ``format_gelem``; parts must appear in the order v, a, t."""
    text = text.strip()
    if text == "1":
        return G_IDENTITY
    parts = text.split(".")
    v = ZERO_VEC
    invs: frozenset[int] = frozenset()
    shift = 0
    rank = -1
    for part in parts:
        if not _PART_RE.fullmatch(part) or part == "1":
            raise RingParseError(f"Bad group element part {part!r} in {text!r}")
        kind = part[0]
        order = "vat".index(kind)
        if order <= rank:
            raise RingParseError(f"Parts out of order in {text!r}")
        rank = order
        if kind == "v":
            v = FinVec.of(*(_parse_basis(item, text) for item in _items(part)))
        elif kind == "a":
            items = _items(part)
            if not all(_A_ITEM_RE.match(i) for i in items):
                raise RingParseError(f"Bad involution list in {text!r}")
            invs = QElem.of(int(i) for i in items).invs
        else:
            m = _T_RE.match(part)
            assert m is not None
            shift = int(m.group(1)) if m.group(1) is not None else 1
    return GElem(v, QElem(invs, shift))


def _items(part: str) -> list[str]:
    body = part[2:-1].strip()
    if not body:
        raise RingParseError(f"Empty bracket in {part!r}")
    return [item.strip() for item in body.split("+" if part[0] == "v" else ",")]


def _parse_basis(item: str, text: str) -> BasisVec:
    m = _VEC_ITEM_RE.match(item)
    if m is None:
        raise RingParseError(f"Bad basis vector {item!r} in {text!r}")
    return BasisVec(int(m.group(2)), m.group(1))


__all__ = [
    "BasisVec",
    "FinVec",
    "GElem",
    "G_IDENTITY",
    "QElem",
    "Q_IDENTITY",
    "ZERO_VEC",
    "a_elem",
    "e",
    "f",
    "format_gelem",
    "g_conj",
    "g_inv",
    "g_mul",
    "parse_gelem",
    "q_elem",
    "t_elem",
    "vec",
]
