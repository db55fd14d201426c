"""Shared plumbing for subcommands: resolved config, input checks, output."""

import argparse
import logging
from dataclasses import dataclass
from pathlib import Path

from pydantic import BaseModel

from tss_geo.config import Settings
from tss_geo.errors import InputError
from tss_geo.formats import dump_model
from tss_geo.services.storage import ArtifactStore

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_NO = 1
EXIT_USAGE = 2

# argparse destinations that name files read by a command
INPUT_FLAGS = ("input", "emb", "coords", "case")


@dataclass(frozen=True, slots=True)
class CommandConfig:
    """Flags merged over settings; input files are checked before any work."""

    command: str
    inputs: dict[str, Path]
    out: Path | None
    svg: Path | None
    seed: int
    oracle_budget: float
    workers: int
    output_dir: Path
    embed_seed: int
    embed_attempts: int

    @classmethod
    def from_args(
        cls, args: argparse.Namespace, settings: Settings
    ) -> "CommandConfig":
        """Resolve flags against ``settings``.

        Raises:
            InputError: if an input file is missing or a numeric flag is out
                of range.
        """
        inputs: dict[str, Path] = {}
        for name in INPUT_FLAGS:
            path = getattr(args, name, None)
            if path is None:
                continue
            if not Path(path).is_file():
                raise InputError(f"cannot read {path}: no such file")
            inputs[name] = Path(path)
        workers = args.workers if args.workers is not None else settings.workers
        budget = args.oracle_budget or settings.oracle_budget_seconds
        if workers < 0:
            raise InputError(f"--workers must be >= 0, got {workers}")
        if budget <= 0:
            raise InputError(f"--oracle-budget must be positive, got {budget}")
        embed_seed = getattr(args, "embed_seed", None)
        embed_attempts = getattr(args, "attempts", None)
        return cls(
            command=args.command,
            inputs=inputs,
            out=getattr(args, "out", None),
            svg=getattr(args, "svg", None),
            seed=getattr(args, "seed", None) or 0,
            oracle_budget=budget,
            workers=workers if workers > 0 else settings.effective_workers,
            output_dir=getattr(args, "repro_dir", None) or settings.output_dir,
            embed_seed=settings.embed_seed if embed_seed is None else embed_seed,
            embed_attempts=embed_attempts or settings.embed_attempts,
        )

    def input(self, name: str = "input") -> Path:
        path = self.inputs.get(name)
        if path is None:
            raise InputError(f"missing --{name.replace('_', '-')} file")
        return path


def parse_vertex_list(text: str) -> list[int]:
    """``"0,3, 5"`` -> ``[0, 3, 5]``; the empty string is the empty set.

    Raises:
        InputError: on a token that is not a non-negative integer.
    """
    vertices = []
    for token in text.split(","):
        token = token.strip()
        if not token:
            continue
        if not token.isdigit():
            raise InputError(f"not a vertex id: {token!r}")
        vertices.append(int(token))
    return vertices


def emit(config: CommandConfig, model: BaseModel, summary: str) -> None:
    """JSON to ``--out`` with the summary on stdout, or JSON on stdout."""
    text = dump_model(model)
    if config.out is None:
        print(text, end="")
        return
    ArtifactStore.write_text(config.out, text)
    print(summary)


def emit_svg(config: CommandConfig, svg: str | None) -> None:
    if config.svg is None:
        return
    if svg is None:
        logger.warning("nothing to draw for %s; --svg ignored", config.command)
        return
    ArtifactStore.write_text(config.svg, svg)
    logger.info("Drawing written to %s", config.svg)
