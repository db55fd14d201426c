"""Settings loaded from TSS_* variables."""

from __future__ import annotations

from pathlib import Path

import pytest
from pydantic import ValidationError

from tss_geo.config import Settings, get_settings


def test_defaults() -> None:
    settings = Settings()

    assert settings.oracle_budget_seconds == 10.0
    assert settings.workers == 0
    assert settings.embed_seed == 0
    assert settings.embed_attempts == 24
    assert settings.log_level == "INFO"
    assert settings.output_dir == Path("./artifacts")


def test_environment_overrides(monkeypatch: pytest.MonkeyPatch) -> None:
    monkeypatch.setenv("TSS_WORKERS", "3")
    monkeypatch.setenv("TSS_ORACLE_BUDGET_SECONDS", "0.5")
    monkeypatch.setenv("TSS_LOG_LEVEL", "DEBUG")
    monkeypatch.setenv("TSS_OUTPUT_DIR", "/tmp/tss-out")

    settings = Settings()

    assert settings.workers == 3
    assert settings.effective_workers == 3
    assert settings.oracle_budget_seconds == 0.5
    assert settings.log_level == "DEBUG"
    assert settings.output_dir == Path("/tmp/tss-out")


def test_dotenv_file_is_read(tmp_path: Path) -> None:
    (tmp_path / ".env").write_text("TSS_EMBED_SEED=9\n", encoding="utf-8")

    assert Settings().embed_seed == 9


def test_zero_workers_means_every_core() -> None:
    assert Settings(workers=0).effective_workers >= 1


def test_validator_lists_every_problem() -> None:
    with pytest.raises(ValidationError) as info:
        Settings(oracle_budget_seconds=0, workers=-1, embed_attempts=0)

    message = str(info.value)
    assert "TSS_ORACLE_BUDGET_SECONDS must be positive" in message
    assert "TSS_WORKERS must be >= 0" in message
    assert "TSS_EMBED_ATTEMPTS must be >= 1" in message


def test_unknown_log_level_is_rejected(monkeypatch: pytest.MonkeyPatch) -> None:
    monkeypatch.setenv("TSS_LOG_LEVEL", "LOUD")

    with pytest.raises(ValidationError):
        Settings()


def test_get_settings_is_cached(monkeypatch: pytest.MonkeyPatch) -> None:
    first = get_settings()
    monkeypatch.setenv("TSS_WORKERS", "5")

    assert get_settings() is first
    get_settings.cache_clear()
    assert get_settings().workers == 5
