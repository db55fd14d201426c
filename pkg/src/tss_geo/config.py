"""Runtime configuration using Pydantic Settings."""

import os
from functools import lru_cache
from pathlib import Path
from typing import Literal

from pydantic import Field, model_validator
from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    """Settings loaded from TSS_* environment variables and an optional .env."""

    model_config = SettingsConfigDict(
        env_prefix="TSS_",
        env_file=".env",
        env_file_encoding="utf-8",
        extra="ignore",
    )

    oracle_budget_seconds: float = Field(
        default=10.0,
        description="Per-case time budget for exact oracles",
    )
    workers: int = Field(
        default=0,
        description="Worker processes for oracles and campaigns (0 = all cores)",
    )
    embed_seed: int = Field(default=0, description="Seed for embedding restarts")
    embed_attempts: int = Field(
        default=24,
        description="Restart budget of the rectilinear embedder",
    )
    log_level: Literal["DEBUG", "INFO", "WARNING", "ERROR"] = Field(
        default="INFO",
        description="Root log level used by the CLI",
    )
    output_dir: Path = Field(
        default=Path("./artifacts"),
        description="Directory for reproduction files and journals",
    )

    @property
    def effective_workers(self) -> int:
        """Worker count with 0 resolved to the available parallelism."""
        if self.workers > 0:
            return self.workers
        return os.cpu_count() or 1

    @model_validator(mode="after")
    def validate_limits(self) -> "Settings":
        """Reject budgets and counts that cannot drive a run."""
        problems: list[str] = []
        if self.oracle_budget_seconds <= 0:
            problems.append("TSS_ORACLE_BUDGET_SECONDS must be positive")
        if self.workers < 0:
            problems.append("TSS_WORKERS must be >= 0")
        if self.embed_attempts < 1:
            problems.append("TSS_EMBED_ATTEMPTS must be >= 1")
        if problems:
            raise ValueError("; ".join(problems))
        return self


@lru_cache(maxsize=1)
def get_settings() -> Settings:
    """Get cached settings instance."""
    return Settings()
