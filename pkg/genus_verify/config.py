"""Configuration utilities for genus-verify.

Loads defaults for seeds, budgets and sample counts from environment variables.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from typing import Final

from dotenv import load_dotenv

# Load environment variables once at import time. Do not reload in functions to keep
# behavior predictable for tests that patch environment variables.
load_dotenv()

DEFAULT_SEED: Final[int] = 0
DEFAULT_BUDGET_MS: Final[int] = 120_000
DEFAULT_SAMPLES: Final[int] = 500
DEFAULT_LOG_LEVEL: Final[str] = "INFO"
MAX_SEED: Final[int] = 2**64 - 1

_LOG_LEVELS: Final = frozenset({"TRACE", "DEBUG", "INFO", "SUCCESS", "WARNING", "ERROR"})


@dataclass(frozen=True)
class Settings:
    """Typed run defaults; CLI flags override each field."""

    seed: int = DEFAULT_SEED
    budget_ms: int = DEFAULT_BUDGET_MS
    samples: int = DEFAULT_SAMPLES
    log_level: str = DEFAULT_LOG_LEVEL


def _env_int(name: str, default: int, *, low: int, high: int | None = None) -> int:
    raw = os.environ.get(name)
    if raw is None or raw.strip() == "":
        return default
    try:
        val = int(raw.strip())
    except ValueError:
        raise ValueError(f"Invalid integer in environment variable {name}: {raw!r}") from None
    if val < low or (high is not None and val > high):
        raise ValueError(f"Environment variable {name} out of range: {val}")
    return val


def load_settings() -> Settings:
    """Load and validate run defaults from environment.

    Returns:
        Settings: seed from ``GENUS_SEED``, per-check budget from ``GENUS_BUDGET_MS``,
        sample count from ``GENUS_SAMPLES`` and log level from ``GENUS_LOG_LEVEL``.

    Raises:
        ValueError: If a variable is set but malformed or out of range.
    """
    level = os.environ.get("GENUS_LOG_LEVEL", DEFAULT_LOG_LEVEL).strip().upper()
    if level not in _LOG_LEVELS:
        raise ValueError(f"Invalid GENUS_LOG_LEVEL: {level!r}")
    return Settings(
        seed=_env_int("GENUS_SEED", DEFAULT_SEED, low=0, high=MAX_SEED),
        budget_ms=_env_int("GENUS_BUDGET_MS", DEFAULT_BUDGET_MS, low=1),
        samples=_env_int("GENUS_SAMPLES", DEFAULT_SAMPLES, low=1),
        log_level=level,
    )


# Constants
SCHEMA_VERSION: Final[str] = "genus-verify/1"
