"""Command-line front end.

Usage examples:

    genus-verify branch-density --lambda 0 --depth 1
    genus-verify soluble-decode --lambda 10110 --len 5
    genus-verify branch-distinguish --mu 000 --nu 010 --depth 3
    genus-verify all --jobs 4 --out report.json

Defaults for --seed, --budget-ms and --samples come from GENUS_SEED,
GENUS_BUDGET_MS and GENUS_SAMPLES (a .env file is honored).
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import asdict

from loguru import logger

from . import __version__
from .config import Settings, load_settings
from .errors import ScenarioError
from .metrics import snapshot
from .report import EXIT_FAIL, EXIT_USAGE, emit_report
from .scenarios import ALL, SCENARIOS, build_config, run_scenario


def _build_parser(settings: Settings) -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="genus-verify",
        description="Finite-level verification of two profinitely-equivalent group families.",
    )
    parser.add_argument("scenario", choices=[*SCENARIOS, ALL], help="Scenario to run.")
    parser.add_argument("--lambda", dest="lam", metavar="BITS", help="Sequence lambda.")
    parser.add_argument("--mu", metavar="BITS", help="First sequence of a pair.")
    parser.add_argument("--nu", metavar="BITS", help="Second sequence of a pair.")
    parser.add_argument("--depth", type=int, help="Tree depth n (1..4).")
    parser.add_argument("--period", type=int, help="Period m of the subgroup N_m.")
    parser.add_argument("--samples", type=int, default=settings.samples, help="Sample count.")
    parser.add_argument("--seed", type=int, default=settings.seed, help="Master seed (u64).")
    parser.add_argument("--len", dest="length", type=int, help="Prefix length / conjugator n.")
    parser.add_argument("--out", metavar="PATH", help="Report path (stdout when omitted).")
    parser.add_argument(
        "--budget-ms", type=int, default=settings.budget_ms, help="Time cap per check."
    )
    parser.add_argument("--jobs", type=int, default=1, help="Worker processes for 'all'.")
    parser.add_argument("--verbose", action="store_true", help="Log at DEBUG level.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    return parser


def _configure_logging(level: str) -> None:
    logger.remove()
    logger.add(sys.stderr, level=level)


def main(argv: list[str] | None = None) -> int:
    """Parse arguments, run the scenario and write the report; returns the exit code."""
    try:
        settings = load_settings()
    except ValueError as exc:
        print(f"genus-verify: {exc}", file=sys.stderr)
        return EXIT_USAGE

    args = _build_parser(settings).parse_args(argv)
    _configure_logging("DEBUG" if args.verbose else settings.log_level)

    raw = {
        key: value
        for key, value in vars(args).items()
        if key not in {"out", "verbose"} and value is not None
    }
    try:
        cfg = build_config(**raw)
    except ScenarioError as exc:
        logger.error("Invalid configuration: {}", exc)
        return EXIT_USAGE

    report = run_scenario(cfg)
    try:
        code = emit_report(report, args.out)
    except OSError as exc:
        logger.error("Could not write report to {}: {}", args.out, exc)
        return EXIT_FAIL
    logger.info("Counters: {}", asdict(snapshot()))
    return code


if __name__ == "__main__":
    sys.exit(main())
