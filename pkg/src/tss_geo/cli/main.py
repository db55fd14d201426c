"""``tss-geo`` entry point: argument parsing, logging and exit codes."""

import argparse
import logging
import sys
from collections.abc import Sequence

from pydantic import ValidationError

from tss_geo import __version__
from tss_geo.cli.common import EXIT_NO, EXIT_USAGE, CommandConfig
from tss_geo.config import Settings, get_settings
from tss_geo.errors import InputError, TSSGeoError

logger = logging.getLogger(__name__)

LOG_FORMAT = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"
LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR")


def build_parser() -> argparse.ArgumentParser:
    """Create the parser with every subcommand registered."""
    from tss_geo.cli.commands import embed, gen, reduce, simulate, solve, verify

    parser = argparse.ArgumentParser(
        prog="tss-geo",
        description="Target Set Selection on geometric intersection graphs",
    )
    parser.add_argument("--version", action="version", version=__version__)
    parser.add_argument("--log-level", choices=LOG_LEVELS)
    parser.add_argument(
        "--workers", type=int, help="worker processes (0 = all cores)"
    )
    parser.add_argument(
        "--oracle-budget", type=float, help="seconds per exact oracle call"
    )
    subparsers = parser.add_subparsers(dest="command", required=True)

    # Registration order is the order shown by --help
    solve.register(subparsers)
    simulate.register(subparsers)
    reduce.register(subparsers)
    embed.register(subparsers)
    verify.register(subparsers)
    gen.register(subparsers)
    return parser


def _configure_logging(level: str) -> None:
    logging.basicConfig(level=level, format=LOG_FORMAT, stream=sys.stderr)
    logging.getLogger().setLevel(level)


def run(argv: Sequence[str] | None = None) -> int:
    """Parse ``argv``, run the command and return its exit code."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE

    try:
        settings: Settings = get_settings()
    except ValidationError as exc:
        print(f"error: invalid settings: {exc}", file=sys.stderr)
        return EXIT_USAGE

    _configure_logging(args.log_level or settings.log_level)
    try:
        config = CommandConfig.from_args(args, settings)
        logger.debug("Running %s with %s", config.command, config)
        code: int = args.handler(args, config)
        return code
    except InputError as exc:
        logger.error("%s", exc)
        if exc.details:
            logger.debug("details: %s", exc.details)
        return EXIT_USAGE
    except TSSGeoError as exc:
        logger.error("%s [%s]", exc, exc.code)
        if exc.details:
            logger.debug("details: %s", exc.details)
        return EXIT_NO


def main() -> None:
    sys.exit(run())
