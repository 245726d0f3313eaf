"""The integral group ring ZG: finitely supported integer combinations of GElem."""

from __future__ import annotations

import re
from collections import defaultdict
from collections.abc import Iterable, Iterator, Mapping
from dataclasses import dataclass, field
from typing import Final

from ..errors import RingParseError
from .group import G_IDENTITY, GElem, g_mul, parse_gelem

_COEFF_RE: Final = re.compile(r"^(\d+)\s*\*\s*(.+)$")
_INT_RE: Final = re.compile(r"^\d+$")


def _clean(terms: Iterable[tuple[GElem, int]]) -> dict[GElem, int]:
    acc: defaultdict[GElem, int] = defaultdict(int)
    for g, c in terms:
        acc[g] += c
    return {g: c for g, c in sorted(acc.items(), key=lambda kv: kv[0].sort_key()) if c}


@dataclass(frozen=True)
class RingElem:
    """sum c_g * g with no zero coefficients stored."""

    terms: Mapping[GElem, int] = field(default_factory=dict)

    def __post_init__(self) -> None:
        object.__setattr__(self, "terms", _clean(self.terms.items()))

    @classmethod
    def zero(cls) -> RingElem:
        return cls()

    @classmethod
    def one(cls) -> RingElem:
        return cls({G_IDENTITY: 1})

    @classmethod
    def of(cls, g: GElem, coeff: int = 1) -> RingElem:
        return cls({g: coeff})

    @classmethod
    def minus_one(cls, g: GElem) -> RingElem:
        """g - 1."""
        return cls(_clean([(g, 1), (G_IDENTITY, -1)]))

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, RingElem):
            return NotImplemented
        return self.terms == other.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def __iter__(self) -> Iterator[tuple[GElem, int]]:
        return iter(self.terms.items())

    def is_zero(self) -> bool:
        return not self.terms

    def support(self) -> tuple[GElem, ...]:
        return tuple(self.terms)

    def coefficient(self, g: GElem) -> int:
        return self.terms.get(g, 0)

    def norm1(self) -> int:
        """Sum of the absolute values of the coefficients."""
        return sum(abs(c) for c in self.terms.values())

    def __add__(self, other: RingElem) -> RingElem:
        return RingElem(_clean([*self.terms.items(), *other.terms.items()]))

    def __neg__(self) -> RingElem:
        return RingElem({g: -c for g, c in self.terms.items()})

    def __sub__(self, other: RingElem) -> RingElem:
        return self + (-other)

    def __mul__(self, other: RingElem | GElem | int) -> RingElem:
        if isinstance(other, int):
            return RingElem({g: c * other for g, c in self.terms.items()})
        if isinstance(other, GElem):
            return RingElem(_clean((g_mul(g, other), c) for g, c in self.terms.items()))
        if isinstance(other, RingElem):
            return RingElem(
                _clean(
                    (g_mul(g, h), c * d)
                    for g, c in self.terms.items()
                    for h, d in other.terms.items()
                )
            )
        return NotImplemented

    def __rmul__(self, other: GElem | int) -> RingElem:
        if isinstance(other, int):
            return self * other
        if isinstance(other, GElem):
            return RingElem(_clean((g_mul(other, g), c) for g, c in self.terms.items()))
        return NotImplemented

    def __str__(self) -> str:
        return format_ring(self)


def ring_sum(elems: Iterable[RingElem]) -> RingElem:
    return RingElem(_clean(item for r in elems for item in r.terms.items()))


# -- text format ---------------------------------------------------------------------------


def _format_term(g: GElem, c: int) -> str:
    if g.is_identity():
        return str(abs(c))
    return str(g) if abs(c) == 1 else f"{abs(c)}*{g}"


def format_ring(r: RingElem) -> str:
    """Canonical text, e.g. ``3*v[e0+f-2].a[1,3].t^2 - v[e1] + 1``; zero is ``0``."""
    if not r.terms:
        return "0"
    out: list[str] = []
    for k, (g, c) in enumerate(r.terms.items()):
        body = _format_term(g, c)
        if k == 0:
            out.append(body if c > 0 else f"-{body}")
        else:
            out.append(f"{'+' if c > 0 else '-'} {body}")
    return " ".join(out)


def _split_terms(text: str) -> list[tuple[int, str]]:
    """Split at top-level signs; a '-' after '^' or inside brackets is part of a term."""
    terms: list[tuple[int, str]] = []
    buf: list[str] = []
    sign = 1
    depth = 0
    prev = ""
    seen_op = False
    for ch in text:
        if ch == "[":
            depth += 1
        elif ch == "]":
            depth -= 1
            if depth < 0:
                raise RingParseError(f"Unbalanced ']' in {text!r}")
        if depth == 0 and ch in "+-" and prev != "^":
            chunk = "".join(buf).strip()
            if chunk:
                terms.append((sign, chunk))
                buf = []
            elif seen_op:
                raise RingParseError(f"Dangling operator in {text!r}")
            sign = 1 if ch == "+" else -1
            seen_op = True
            prev = ch
            continue
        if not ch.isspace():
            prev = ch
        buf.append(ch)
    if depth:
        raise RingParseError(f"Unbalanced '[' in {text!r}")
    chunk = "".join(buf).strip()
    if not chunk:
        raise RingParseError(f"Missing term in {text!r}")
    terms.append((sign, chunk))
    return terms


def parse_ring(text: str) -> RingElem:
    """Parse the output of ``format_ring``; repeated group elements are summed.

    Raises:
        RingParseError: on any malformed term.
    """
    items: list[tuple[GElem, int]] = []
    for sign, chunk in _split_terms(text):
        m = _COEFF_RE.match(chunk)
        if m is not None:
            items.append((parse_gelem(m.group(2)), sign * int(m.group(1))))
        elif _INT_RE.match(chunk):
            items.append((G_IDENTITY, sign * int(chunk)))
        else:
            items.append((parse_gelem(chunk), sign))
    return RingElem(_clean(items))


__all__ = ["RingElem", "format_ring", "parse_ring", "ring_sum"]
