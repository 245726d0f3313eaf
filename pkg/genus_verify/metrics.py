"""Lightweight in-process counters for algorithm observability.

The counters are process-local and intended for structured logging and test
assertions only. They never feed into results or reports.
"""

from __future__ import annotations

from dataclasses import dataclass


@dataclass
class Counters:
    sifts: int = 0
    schreier_generators: int = 0
    base_points: int = 0
    membership_queries: int = 0
    oracle_levels: int = 0
    budget_exhausted: int = 0


_counters = Counters()


def inc_sifts(amount: int = 1) -> None:
    _counters.sifts += amount


def inc_schreier_generators(amount: int = 1) -> None:
    _counters.schreier_generators += amount


def inc_base_points() -> None:
    _counters.base_points += 1


def inc_membership_queries() -> None:
    _counters.membership_queries += 1


def inc_oracle_levels(amount: int = 1) -> None:
    _counters.oracle_levels += amount


def inc_budget_exhausted() -> None:
    _counters.budget_exhausted += 1


def snapshot() -> Counters:
    """Return a copy-like view of counters for reporting/tests."""
    return Counters(
        sifts=_counters.sifts,
        schreier_generators=_counters.schreier_generators,
        base_points=_counters.base_points,
        membership_queries=_counters.membership_queries,
        oracle_levels=_counters.oracle_levels,
        budget_exhausted=_counters.budget_exhausted,
    )


def reset() -> None:
    """Reset counters (for tests)."""
    global _counters
    _counters = Counters()
