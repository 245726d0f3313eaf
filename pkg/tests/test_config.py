from __future__ import annotations

import pytest

from genus_verify.config import DEFAULT_BUDGET_MS, DEFAULT_SAMPLES, MAX_SEED, load_settings


def _clear(monkeypatch: pytest.MonkeyPatch) -> None:
    for k in ["GENUS_SEED", "GENUS_BUDGET_MS", "GENUS_SAMPLES", "GENUS_LOG_LEVEL"]:
        monkeypatch.delenv(k, raising=False)


def test_load_settings_defaults(monkeypatch: pytest.MonkeyPatch) -> None:
    _clear(monkeypatch)
    s = load_settings()
    assert s.seed == 0
    assert s.budget_ms == DEFAULT_BUDGET_MS
    assert s.samples == DEFAULT_SAMPLES
    assert s.log_level == "INFO"


def test_load_settings_from_env(monkeypatch: pytest.MonkeyPatch) -> None:
    _clear(monkeypatch)
    monkeypatch.setenv("GENUS_SEED", "42")
    monkeypatch.setenv("GENUS_BUDGET_MS", "5000")
    monkeypatch.setenv("GENUS_SAMPLES", "64")
    monkeypatch.setenv("GENUS_LOG_LEVEL", "debug")
    s = load_settings()
    assert (s.seed, s.budget_ms, s.samples, s.log_level) == (42, 5000, 64, "DEBUG")


def test_seed_accepts_full_u64_range(monkeypatch: pytest.MonkeyPatch) -> None:
    _clear(monkeypatch)
    monkeypatch.setenv("GENUS_SEED", str(MAX_SEED))
    assert load_settings().seed == MAX_SEED


@pytest.mark.parametrize(
    ("name", "value"),
    [
        ("GENUS_SEED", "abc"),
        ("GENUS_SEED", "-1"),
        ("GENUS_SEED", str(2**64)),
        ("GENUS_BUDGET_MS", "0"),
        ("GENUS_SAMPLES", "1.5"),
        ("GENUS_LOG_LEVEL", "LOUD"),
    ],
)
def test_load_settings_rejects_bad_values(
    monkeypatch: pytest.MonkeyPatch, name: str, value: str
) -> None:
    _clear(monkeypatch)
    monkeypatch.setenv(name, value)
    with pytest.raises(ValueError) as ei:
        load_settings()
    assert name in str(ei.value)
