"""Scenario configuration and per-scenario seed substreams."""

from __future__ import annotations

import hashlib
from typing import Any, Final

from pydantic import BaseModel, ConfigDict, Field, field_validator

from ..config import DEFAULT_BUDGET_MS, DEFAULT_SAMPLES, DEFAULT_SEED, MAX_SEED
from ..errors import ScenarioError
from ..report import CheckResult

SCENARIOS: Final[tuple[str, ...]] = (
    "branch-density",
    "branch-power-closure",
    "branch-distinguish",
    "branch-conditions",
    "soluble-decode",
    "soluble-conjugator",
    "soluble-ideal-equality",
    "soluble-translate",
    "soluble-oracle",
)
ALL: Final[str] = "all"

# depth used when --depth is not given
DEFAULT_DEPTHS: Final[dict[str, int]] = {
    "branch-density": 2,
    "branch-power-closure": 2,
    "branch-distinguish": 3,
}


class ScenarioConfig(BaseModel):
    """Validated parameters of one run; unknown keys are rejected."""

    model_config = ConfigDict(extra="forbid", frozen=True)

    scenario: str
    lam: str = Field(default="10110", pattern=r"^[01]+$")
    mu: str = Field(default="000", pattern=r"^[01]+$")
    nu: str = Field(default="010", pattern=r"^[01]+$")
    depth: int | None = Field(default=None, ge=1, le=4)
    period: int = Field(default=2, ge=1)
    samples: int = Field(default=DEFAULT_SAMPLES, ge=1)
    seed: int = Field(default=DEFAULT_SEED, ge=0, le=MAX_SEED)
    length: int = Field(default=5, ge=1)
    budget_ms: int = Field(default=DEFAULT_BUDGET_MS, ge=1)
    jobs: int = Field(default=1, ge=1)

    @field_validator("scenario")
    @classmethod
    def _known_scenario(cls, value: str) -> str:
        if value != ALL and value not in SCENARIOS:
            raise ValueError(f"unknown scenario {value!r}")
        return value

    def depth_for(self, scenario: str) -> int:
        if self.depth is not None:
            return self.depth
        return DEFAULT_DEPTHS.get(scenario, 2)

    def parameters(self, scenario: str) -> dict[str, Any]:
        """Report parameters with per-scenario defaults resolved."""
        data = self.model_dump(exclude={"scenario", "jobs", "depth"})
        data["depth"] = self.depth_for(scenario)
        return data


def scenario_seed(master: int, scenario: str) -> int:
    """Seed substream of ``scenario``: first 8 bytes of sha256("master:scenario")."""
    digest = hashlib.sha256(f"{master}:{scenario}".encode()).digest()
    return int.from_bytes(digest[:8], "big")


def require_known(scenario: str) -> None:
    if scenario != ALL and scenario not in SCENARIOS:
        raise ScenarioError(f"Unknown scenario {scenario!r}; choose from {', '.join(SCENARIOS)}")
