from __future__ import annotations

import json
from pathlib import Path

import pytest

from genus_verify.cli import main


@pytest.fixture(autouse=True)
def _clean_env(monkeypatch: pytest.MonkeyPatch) -> None:
    for k in ["GENUS_SEED", "GENUS_BUDGET_MS", "GENUS_SAMPLES", "GENUS_LOG_LEVEL"]:
        monkeypatch.delenv(k, raising=False)


def test_decode_writes_report(tmp_path: Path) -> None:
    out = tmp_path / "decode.json"
    code = main(["soluble-decode", "--lambda", "10110", "--len", "5", "--out", str(out)])
    assert code == 0
    doc = json.loads(out.read_text(encoding="utf-8"))
    assert doc["overall"] == "PASS"
    assert doc["parameters"]["lam"] == "10110"
    assert doc["checks"][0]["details"]["decoded"] == "10110"


def test_report_to_stdout(capsys) -> None:  # type: ignore[no-untyped-def]
    code = main(["branch-density", "--lambda", "0", "--depth", "1", "--samples", "5"])
    assert code == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["scenario"] == "branch-density"
    assert doc["checks"][0]["details"]["order"] == 60


def test_seed_default_from_environment(monkeypatch: pytest.MonkeyPatch, tmp_path: Path) -> None:
    monkeypatch.setenv("GENUS_SEED", "77")
    out = tmp_path / "r.json"
    assert main(["soluble-decode", "--lambda", "1", "--len", "1", "--out", str(out)]) == 0
    assert json.loads(out.read_text(encoding="utf-8"))["parameters"]["seed"] == 77


def test_usage_errors() -> None:
    with pytest.raises(SystemExit) as ei:
        main(["no-such-scenario"])
    assert ei.value.code == 2
    assert main(["soluble-decode", "--lambda", "012"]) == 2
    assert main(["branch-density", "--depth", "7"]) == 2


def test_bad_environment_is_a_usage_error(monkeypatch: pytest.MonkeyPatch) -> None:
    monkeypatch.setenv("GENUS_SEED", "-3")
    assert main(["soluble-decode"]) == 2


def test_failing_check_exits_one(capsys) -> None:  # type: ignore[no-untyped-def]
    assert main(["branch-distinguish", "--mu", "01", "--nu", "01", "--depth", "2"]) == 1
    assert json.loads(capsys.readouterr().out)["overall"] == "ERROR"


def test_unwritable_output(tmp_path: Path) -> None:
    target = tmp_path / "missing" / "report.json"
    assert main(["soluble-decode", "--len", "1", "--out", str(target)]) == 1
