"""Finite binary words standing for infinite 0/1 sequences."""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Final

_BITS_RE: Final = re.compile(r"^[01]*$")


@dataclass(frozen=True)
class LambdaSeq:
    """A binary word padded with zeros to an infinite sequence.

    ``origin`` is the index of the first bit: 0 for the branch construction
    (sequences indexed from 0), 1 for the soluble construction.
    """

    bits: str
    origin: int = 0
    pad: int = 0

    def __post_init__(self) -> None:
        if not _BITS_RE.match(self.bits):
            raise ValueError(f"Invalid bitstring: {self.bits!r}")
        if self.pad != 0:
            raise ValueError("Padding bit is fixed to 0")

    @classmethod
    def branch(cls, bits: str) -> LambdaSeq:
        return cls(bits=bits, origin=0)

    @classmethod
    def soluble(cls, bits: str) -> LambdaSeq:
        return cls(bits=bits, origin=1)

    def bit(self, n: int) -> int:
        idx = n - self.origin
        if 0 <= idx < len(self.bits):
            return int(self.bits[idx])
        return self.pad

    def __getitem__(self, n: int) -> int:
        return self.bit(n)

    @property
    def last_index(self) -> int:
        """Largest index that is not padding (origin - 1 for the empty word)."""
        return self.origin + len(self.bits) - 1

    def prefix(self, length: int) -> str:
        return "".join(str(self.bit(self.origin + j)) for j in range(length))

    def with_bit(self, n: int, value: int) -> LambdaSeq:
        """Return a copy with index ``n`` set to ``value``, extending the word as needed."""
        idx = n - self.origin
        if idx < 0:
            raise ValueError(f"Index {n} precedes origin {self.origin}")
        width = max(len(self.bits), idx + 1)
        chars = list(self.bits.ljust(width, "0"))
        chars[idx] = "1" if value else "0"
        return LambdaSeq(bits="".join(chars), origin=self.origin)

    def first_difference(self, other: LambdaSeq, upto: int) -> int | None:
        """Least index in ``origin..upto`` where the sequences differ, if any."""
        for n in range(self.origin, upto + 1):
            if self.bit(n) != other.bit(n):
                return n
        return None

    def __str__(self) -> str:
        return self.bits or "0"
