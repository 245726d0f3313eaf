"""Error taxonomy and status predicates for verification components.

Every precondition failure raised by the algebra modules derives from
``GenusError`` and from the builtin it refines, so callers may catch either.
The scenario layer maps exceptions to report statuses with ``status_for``.
"""

from __future__ import annotations

from typing import Final, Literal

StatusName = Literal["PASS", "FAIL", "FAIL-INCONCLUSIVE", "ERROR"]


class GenusError(Exception):
    """Base class for all genus-verify errors."""


class DegreeMismatchError(GenusError, ValueError):
    """Raised when permutations, chains or portraits of different sizes are combined."""


class PermParseError(GenusError, ValueError):
    """Raised on malformed cycle notation or a non-bijective image list."""


class PortraitError(GenusError, ValueError):
    """Raised on invalid portrait operations (bad depth, non-tree permutation, bad JSON)."""


class NotInAlt5Error(GenusError, ValueError):
    """Raised when an automorphism search is given elements outside Alt(5)."""


class IndistinguishablePrefixError(GenusError, ValueError):
    """Raised when two sequences agree on the whole examined range."""


class MembershipError(GenusError, ValueError):
    """Raised when a non-membership witness is requested for a member."""


class RingParseError(GenusError, ValueError):
    """Raised on malformed group-ring element text."""


class HypothesisViolation(GenusError):
    """Raised when N*H_{gamma,i} and N*H_{beta,i} differ at some level i."""

    def __init__(self, message: str, level: int) -> None:
        super().__init__(message)
        self.level = level


class ScenarioError(GenusError, ValueError):
    """Raised for unknown scenarios or invalid scenario configuration."""


class BudgetExceeded(GenusError, TimeoutError):
    """Raised when a check runs out of its time budget."""

    def __init__(self, message: str, achieved: object | None = None) -> None:
        super().__init__(message)
        self.achieved = achieved


_INCONCLUSIVE_EXC_TYPES: Final = (BudgetExceeded,)

_FAILING_EXC_TYPES: Final = (HypothesisViolation,)


def is_inconclusive(exc: BaseException) -> bool:
    """Return True if the exception means "ran out of resources", not "wrong"."""
    return isinstance(exc, _INCONCLUSIVE_EXC_TYPES)


def status_for(exc: BaseException) -> StatusName:
    """Map an exception raised inside a check to a report status.

    - Budget exhaustion is inconclusive, never a PASS
    - A violated chain hypothesis (N·H mismatch) is a genuine FAIL
    - Anything else (bad input, internal error) is an ERROR
    """
    if is_inconclusive(exc):
        return "FAIL-INCONCLUSIVE"
    if isinstance(exc, _FAILING_EXC_TYPES):
        return "FAIL"
    return "ERROR"
