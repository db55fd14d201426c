"""Append-only JSONL journal of campaign case outcomes."""

import json
from datetime import datetime
from pathlib import Path
from typing import Any


class CaseJournal:
    """One JSON object per line at ``<output_dir>/<campaign>.jsonl``.

    Entries are append-only; unreadable lines are skipped on read.
    """

    def __init__(self, output_dir: Path | str, campaign: str) -> None:
        self.output_dir = Path(output_dir)
        self.path = self.output_dir / f"{campaign}.jsonl"

    def append(self, case: int, status: str, **data: Any) -> None:
        """Record one case.

        Args:
            case: Case index within the campaign
            status: passed, failed or skipped
            **data: Extra fields (seed, sizes, error code)
        """
        self.output_dir.mkdir(parents=True, exist_ok=True)
        entry = {
            "ts": datetime.now().astimezone().isoformat(),
            "case": case,
            "status": status,
            **data,
        }
        with self.path.open("a", encoding="utf-8") as f:
            f.write(json.dumps(entry, sort_keys=True) + "\n")

    def entries(self, limit: int | None = None) -> list[dict[str, Any]]:
        if not self.path.exists():
            return []
        entries: list[dict[str, Any]] = []
        with self.path.open("r", encoding="utf-8") as f:
            for line in f:
                if not line.strip():
                    continue
                try:
                    entry = json.loads(line)
                except json.JSONDecodeError:
                    continue
                if isinstance(entry, dict):
                    entries.append(entry)
        return entries if limit is None else entries[-limit:]

    def counts(self) -> dict[str, int]:
        """Number of recorded cases per status."""
        stats: dict[str, int] = {}
        for entry in self.entries():
            status = str(entry.get("status", "unknown"))
            stats[status] = stats.get(status, 0) + 1
        return stats
