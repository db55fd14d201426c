"""Artifact storage: reports, drawings and failure reproduction files."""

import json
import logging
from pathlib import Path
from typing import Any

from tss_geo.errors import InputError, ParseError

logger = logging.getLogger(__name__)


class ArtifactStore:
    """Writes outputs below ``output_dir``; repro files are named
    ``<campaign>-case<i>.json``."""

    def __init__(self, output_dir: Path | str) -> None:
        self.output_dir = Path(output_dir)

    def _ensure_dirs(self) -> None:
        self.output_dir.mkdir(parents=True, exist_ok=True)

    def repro_path(self, campaign: str, index: int) -> Path:
        return self.output_dir / f"{campaign}-case{index}.json"

    def write_repro(self, campaign: str, index: int, payload: dict[str, Any]) -> Path:
        """Store a standalone reproduction payload and return its path."""
        self._ensure_dirs()
        path = self.repro_path(campaign, index)
        path.write_text(
            json.dumps(payload, indent=2, sort_keys=True) + "\n", encoding="utf-8"
        )
        logger.info("Wrote repro file %s", path)
        return path

    @staticmethod
    def read_repro(path: Path) -> dict[str, Any]:
        """Load a reproduction payload.

        Raises:
            InputError: if the file cannot be read.
            ParseError: if it is not a JSON object.
        """
        try:
            text = Path(path).read_text(encoding="utf-8")
        except OSError as exc:
            raise InputError(f"cannot read {path}: {exc.strerror}") from exc
        try:
            payload = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ParseError(
                f"{path}: invalid JSON: {exc.msg}", details={"line": exc.lineno}
            ) from exc
        if not isinstance(payload, dict):
            raise ParseError(f"{path}: repro file must hold a JSON object")
        return payload

    @staticmethod
    def write_text(path: Path, text: str) -> Path:
        """Write an explicit output file (``--out``, ``--svg``), creating parents."""
        path = Path(path)
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(text, encoding="utf-8")
        logger.debug("Wrote %s (%d bytes)", path, len(text))
        return path
