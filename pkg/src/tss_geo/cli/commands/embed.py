"""``embed``: rectilinear grid embedding of a planar graph."""

import argparse
from pathlib import Path
from typing import Any

from tss_geo.cli.common import EXIT_OK, CommandConfig, emit, emit_svg
from tss_geo.cli.formatters import format_embedding
from tss_geo.embed.embedding import validate_embedding
from tss_geo.embed.router import compute_embedding
from tss_geo.embed.svg import render_embedding_svg
from tss_geo.errors import ContractViolation
from tss_geo.formats import EmbeddingModel, GraphModel, load_model


def register(subparsers: Any) -> None:
    parser = subparsers.add_parser(
        "embed", help="rectilinear embedding of a planar graph with degree <= 4"
    )
    parser.add_argument("--in", dest="input", type=Path, required=True)
    parser.add_argument("--embed-seed", type=int)
    parser.add_argument("--attempts", type=int, help="restart budget")
    parser.add_argument("--out", type=Path)
    parser.add_argument("--svg", type=Path)
    parser.set_defaults(handler=handle)


def handle(args: argparse.Namespace, config: CommandConfig) -> int:
    g = load_model(config.input(), GraphModel).to_domain()
    emb = compute_embedding(g, seed=config.embed_seed, attempts=config.embed_attempts)
    report = validate_embedding(g, emb)
    if not report.ok:
        raise ContractViolation(
            "embedder produced an invalid embedding", details=report.to_dict()
        )
    emit(config, EmbeddingModel.from_domain(emb), format_embedding(emb))
    emit_svg(config, render_embedding_svg(g, emb))
    return EXIT_OK
