"""Subcommands; each module exposes ``register`` and ``handle``."""

from tss_geo.cli.commands import embed, gen, reduce, simulate, solve, verify

__all__ = [
    "embed",
    "gen",
    "reduce",
    "simulate",
    "solve",
    "verify",
]
