"""Campaign reports."""

from dataclasses import dataclass, field
from pathlib import Path
from typing import Any


@dataclass(slots=True)
class CaseFailure:
    """One failed case with everything needed to reproduce it."""

    case: int
    seed: int
    message: str
    payload: dict[str, Any]
    repro_path: Path | None = None

    def to_dict(self) -> dict[str, Any]:
        return {
            "case": self.case,
            "seed": self.seed,
            "message": self.message,
            "payload": self.payload,
            "repro_path": str(self.repro_path) if self.repro_path else None,
        }


@dataclass(slots=True)
class VerificationReport:
    """Outcome of a campaign; it passes only with zero failures."""

    campaign: str
    seed: int = 0
    cases: int = 0
    passed: int = 0
    skipped: int = 0
    failures: list[CaseFailure] = field(default_factory=list)
    wall_time: float = 0.0
    notes: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def record_pass(self) -> None:
        self.cases += 1
        self.passed += 1

    def record_skip(self, note: str) -> None:
        self.cases += 1
        self.skipped += 1
        self.notes.append(note)

    def record_failure(self, failure: CaseFailure) -> None:
        self.cases += 1
        self.failures.append(failure)

    def summary(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        return (
            f"{self.campaign}: {status} cases={self.cases} passed={self.passed} "
            f"skipped={self.skipped} failed={len(self.failures)} "
            f"({self.wall_time:.2f}s)"
        )

    def to_dict(self) -> dict[str, Any]:
        return {
            "campaign": self.campaign,
            "seed": self.seed,
            "ok": self.ok,
            "cases": self.cases,
            "passed": self.passed,
            "skipped": self.skipped,
            "failures": [f.to_dict() for f in self.failures],
            "wall_time": round(self.wall_time, 3),
            "notes": self.notes,
        }
