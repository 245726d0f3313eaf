"""Verification reports: per-check results, scenario reports and canonical JSON."""

from __future__ import annotations

import json
import time
from collections.abc import Callable, Iterator
from contextlib import contextmanager
from enum import StrEnum
from pathlib import Path
from typing import Any

from loguru import logger
from pydantic import BaseModel, ConfigDict, Field, computed_field

from .config import SCHEMA_VERSION
from .errors import GenusError, status_for


class Status(StrEnum):
    PASS = "PASS"
    FAIL = "FAIL"
    INCONCLUSIVE = "FAIL-INCONCLUSIVE"
    ERROR = "ERROR"


# Exit codes: 0 PASS, 1 FAIL, 2 usage error, 3 budget.
EXIT_PASS = 0
EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3


class CheckResult(BaseModel):
    """One named check with its verdict and machine-readable details."""

    model_config = ConfigDict(frozen=True)

    name: str
    status: Status
    details: dict[str, Any] = Field(default_factory=dict)
    elapsed_ms: int = 0

    @property
    def passed(self) -> bool:
        return self.status is Status.PASS

    @classmethod
    def verdict(
        cls, name: str, ok: bool, details: dict[str, Any] | None = None, elapsed_ms: int = 0
    ) -> CheckResult:
        return cls(
            name=name,
            status=Status.PASS if ok else Status.FAIL,
            details=details or {},
            elapsed_ms=elapsed_ms,
        )


class Report(BaseModel):
    """Scenario report; ``overall`` is PASS iff every check passed."""

    model_config = ConfigDict(frozen=True)

    schema_version: str = SCHEMA_VERSION
    scenario: str
    parameters: dict[str, Any] = Field(default_factory=dict)
    checks: list[CheckResult] = Field(default_factory=list)

    @computed_field  # type: ignore[prop-decorator]
    @property
    def overall(self) -> Status:
        statuses = {c.status for c in self.checks}
        for worst in (Status.ERROR, Status.FAIL, Status.INCONCLUSIVE):
            if worst in statuses:
                return worst
        return Status.PASS


def exit_code_for(report: Report) -> int:
    overall = report.overall
    if overall is Status.PASS:
        return EXIT_PASS
    if overall is Status.INCONCLUSIVE:
        return EXIT_BUDGET
    return EXIT_FAIL


def to_canonical_json(report: Report, *, drop_timings: bool = False) -> str:
    """Serialize with sorted keys and fixed indentation.

    With ``drop_timings`` the ``elapsed_ms`` fields are removed, which is the form
    used to compare two runs for determinism.
    """
    payload = report.model_dump(mode="json")
    if drop_timings:
        for check in payload["checks"]:
            check.pop("elapsed_ms", None)
    return json.dumps(payload, sort_keys=True, indent=2, ensure_ascii=True) + "\n"


def report_from_json(text: str) -> Report:
    data = json.loads(text)
    data.pop("overall", None)
    return Report.model_validate(data)


def emit_report(report: Report, path: str | Path | None) -> int:
    """Write the canonical JSON report to ``path`` (stdout when None).

    Returns:
        int: the process exit code implied by the overall status.
    """
    text = to_canonical_json(report)
    if path is None:
        print(text, end="")
    else:
        Path(path).write_text(text, encoding="utf-8")
        logger.info("Report written to {}", path)
    return exit_code_for(report)


@contextmanager
def stopwatch() -> Iterator[Callable[[], int]]:
    """Yield a callable returning elapsed milliseconds since entry."""
    start = time.monotonic()
    yield lambda: int(round((time.monotonic() - start) * 1000.0))


def guarded(name: str, fn: Callable[[], CheckResult]) -> CheckResult:
    """Run a check, converting raised errors into a non-PASS result.

    Budget exhaustion becomes FAIL-INCONCLUSIVE; any other exception is logged and
    reported as ERROR (or FAIL for violated hypotheses).
    """
    start = time.monotonic()
    try:
        return fn()
    except Exception as exc:  # noqa: BLE001
        elapsed = int(round((time.monotonic() - start) * 1000.0))
        status = Status(status_for(exc))
        details: dict[str, Any] = {"error": f"{type(exc).__name__}: {exc}"}
        achieved = getattr(exc, "achieved", None)
        if achieved is not None:
            details["achieved"] = achieved
        level = getattr(exc, "level", None)
        if level is not None:
            details["level"] = level
        if isinstance(exc, GenusError):
            logger.warning("Check {} ended with {}: {}", name, status.value, exc)
        else:
            logger.error("Check {} raised unexpectedly: {}", name, exc)
        return CheckResult(name=name, status=status, details=details, elapsed_ms=elapsed)
