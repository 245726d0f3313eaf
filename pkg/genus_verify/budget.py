"""Wall-clock budgets for individual checks.

A ``Budget`` is created when a check starts and polled by long-running loops
(Schreier-Sims levels, closure growth, sampling rounds).
"""

from __future__ import annotations

import time

from loguru import logger

from .errors import BudgetExceeded
from .metrics import inc_budget_exhausted


class Budget:
    """Deadline on the monotonic clock.

    ``check()`` raises ``BudgetExceeded`` once the deadline has passed;
    ``remaining_s`` is suitable for ``tenacity.stop_after_delay``.
    """

    def __init__(self, budget_ms: int, *, label: str = "check") -> None:
        self.budget_ms = max(1, int(budget_ms))
        self.label = label
        self.start = time.monotonic()
        self.deadline = self.start + self.budget_ms / 1000.0

    @property
    def elapsed_ms(self) -> int:
        return int(round((time.monotonic() - self.start) * 1000.0))

    @property
    def remaining_s(self) -> float:
        return max(0.0, self.deadline - time.monotonic())

    def expired(self) -> bool:
        return time.monotonic() >= self.deadline

    def check(self, achieved: object | None = None) -> None:
        if self.expired():
            logger.warning("Budget of {} ms exhausted in {}", self.budget_ms, self.label)
            inc_budget_exhausted()
            raise BudgetExceeded(
                f"{self.label}: budget of {self.budget_ms} ms exhausted", achieved=achieved
            )


def unlimited() -> Budget:
    """A budget that will not expire within any realistic run."""
    return Budget(10**12, label="unlimited")
