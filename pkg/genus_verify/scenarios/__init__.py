"""Named verification scenarios and their dispatch.

``run_scenario`` is deterministic given the configuration: every scenario draws
its randomness from its own seed substream of the master seed.
"""

from __future__ import annotations

from collections.abc import Callable
from concurrent.futures import ProcessPoolExecutor
from typing import Final

from loguru import logger
from pydantic import ValidationError

from ..errors import ScenarioError
from ..report import CheckResult, Report
from .base import ALL, SCENARIOS, ScenarioConfig, require_known, scenario_seed
from .branch import branch_conditions, branch_density, branch_distinguish, branch_power_closure
from .soluble import (
    soluble_conjugator,
    soluble_decode,
    soluble_ideal_equality,
    soluble_oracle,
    soluble_translate,
)

ScenarioFn = Callable[[ScenarioConfig, int], list[CheckResult]]

REGISTRY: Final[dict[str, ScenarioFn]] = {
    "branch-density": branch_density,
    "branch-power-closure": branch_power_closure,
    "branch-distinguish": branch_distinguish,
    "branch-conditions": branch_conditions,
    "soluble-decode": soluble_decode,
    "soluble-conjugator": soluble_conjugator,
    "soluble-ideal-equality": soluble_ideal_equality,
    "soluble-translate": soluble_translate,
    "soluble-oracle": soluble_oracle,
}


def _run_one(name: str, cfg: ScenarioConfig) -> list[CheckResult]:
    seed = scenario_seed(cfg.seed, name)
    logger.info("Running scenario {} (seed substream {})", name, seed)
    return REGISTRY[name](cfg, seed)


def _run_all(cfg: ScenarioConfig) -> list[CheckResult]:
    if cfg.jobs > 1:
        with ProcessPoolExecutor(max_workers=cfg.jobs) as pool:
            batches = list(pool.map(_run_one, SCENARIOS, [cfg] * len(SCENARIOS)))
    else:
        batches = [_run_one(name, cfg) for name in SCENARIOS]
    checks: list[CheckResult] = []
    for name, batch in zip(SCENARIOS, batches, strict=True):
        checks.extend(c.model_copy(update={"name": f"{name}/{c.name}"}) for c in batch)
    return checks


def run_scenario(cfg: ScenarioConfig) -> Report:
    """Execute the configured scenario (or every scenario for ``all``).

    Raises:
        ScenarioError: for an unknown scenario name.
    """
    require_known(cfg.scenario)
    if cfg.scenario == ALL:
        checks = _run_all(cfg)
        parameters = cfg.parameters(ALL)
        parameters.pop("depth")
    else:
        checks = _run_one(cfg.scenario, cfg)
        parameters = cfg.parameters(cfg.scenario)
    report = Report(scenario=cfg.scenario, parameters=parameters, checks=checks)
    logger.info("Scenario {}: {} ({} checks)", cfg.scenario, report.overall.value, len(checks))
    return report


def build_config(**values: object) -> ScenarioConfig:
    """Validate raw values into a ScenarioConfig, raising ScenarioError on rejection."""
    try:
        return ScenarioConfig.model_validate(values)
    except ValidationError as exc:
        raise ScenarioError(str(exc)) from None


__all__ = [
    "ALL",
    "REGISTRY",
    "SCENARIOS",
    "ScenarioConfig",
    "build_config",
    "run_scenario",
    "scenario_seed",
]
