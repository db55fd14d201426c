from __future__ import annotations

from collections.abc import Iterator
from pathlib import Path

import pytest

from tss_geo.config import get_settings


@pytest.fixture(autouse=True)
def fresh_settings(tmp_path: Path, monkeypatch: pytest.MonkeyPatch) -> Iterator[None]:
    # keeps a developer .env and ./artifacts out of test runs
    monkeypatch.chdir(tmp_path)
    get_settings.cache_clear()
    yield
    get_settings.cache_clear()
