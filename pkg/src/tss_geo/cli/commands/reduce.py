"""``reduce <id>``: run a registered reduction and write its artifact."""

import argparse
import logging
from pathlib import Path
from typing import Any

from tss_geo.cli.common import EXIT_OK, CommandConfig, emit, emit_svg
from tss_geo.cli.formatters import format_artifact
from tss_geo.embed.svg import render_disks_svg
from tss_geo.errors import InputError
from tss_geo.formats import (
    ArtifactModel,
    CoordsModel,
    EmbeddingModel,
    FormulaModel,
    GraphModel,
    InstanceModel,
    coords_from_pairs,
    load_model,
)
from tss_geo.reduce.artifact import ReductionArtifact
from tss_geo.reduce.cnf import CnfFormula, parse_dimacs
from tss_geo.reduce.registry import REDUCTION_IDS, ReductionInput, create_reduction

logger = logging.getLogger(__name__)

DIMACS_SUFFIXES = (".cnf", ".dimacs")


def register(subparsers: Any) -> None:
    parser = subparsers.add_parser(
        "reduce",
        help="apply a reduction and emit its artifact",
        description=(
            "Inputs: sat2tss/sat2majority read a formula (DIMACS or JSON); "
            "planar2grid, majority and grid2exact2 read an instance; is2udg "
            "reads a graph. Missing embeddings are computed."
        ),
    )
    parser.add_argument("reduction", choices=REDUCTION_IDS)
    parser.add_argument("--in", dest="input", type=Path, required=True)
    parser.add_argument("--emb", type=Path, help="rectilinear embedding JSON")
    parser.add_argument(
        "--coords", type=Path, help="grid coordinates JSON (list of [x, y])"
    )
    parser.add_argument("--r", type=int, help="regularity for is2udg")
    parser.add_argument("--k", type=int, default=0, help="IS budget for is2udg")
    parser.add_argument("--embed-seed", type=int)
    parser.add_argument("--attempts", type=int, help="embedding restart budget")
    parser.add_argument("--out", type=Path)
    parser.add_argument("--svg", type=Path, help="draw the output disks")
    parser.set_defaults(handler=handle)


def _load_formula(path: Path) -> CnfFormula:
    if path.suffix.lower() in DIMACS_SUFFIXES:
        try:
            text = path.read_text(encoding="utf-8")
        except OSError as exc:
            raise InputError(f"cannot read {path}: {exc.strerror}") from exc
        formula = parse_dimacs(text)
    else:
        formula = load_model(path, FormulaModel).to_domain()
    logger.warning("planarity of the variable-clause incidence graph is not checked")
    return formula


def _source(
    reduction_id: str, config: CommandConfig, args: argparse.Namespace
) -> ReductionInput:
    source = ReductionInput(
        r=args.r,
        k=args.k,
        embed_seed=config.embed_seed,
        embed_attempts=config.embed_attempts,
    )
    requires = create_reduction(reduction_id).requires
    path = config.input()
    if "formula" in requires:
        source.formula = _load_formula(path)
    elif "instance" in requires:
        model = load_model(path, InstanceModel)
        source.instance = model.to_domain()
        if model.coords is not None:
            source.coords = coords_from_pairs(model.coords)
    else:
        source.graph = load_model(path, GraphModel).to_domain()
    if "emb" in config.inputs:
        emb_model = load_model(config.input("emb"), EmbeddingModel)
        source.embedding = emb_model.to_domain()
    if "coords" in config.inputs:
        coords_model = load_model(config.input("coords"), CoordsModel)
        source.coords = coords_model.to_domain()
    return source


def _drawing(art: ReductionArtifact) -> str | None:
    if art.disks is not None:
        return render_disks_svg(art.disks, art.graph)
    if art.coords is not None:
        return render_disks_svg(art.coords.to_disks(), art.graph)
    return None


def handle(args: argparse.Namespace, config: CommandConfig) -> int:
    reduction = create_reduction(args.reduction)
    art = reduction.apply(_source(args.reduction, config, args))
    emit(config, ArtifactModel.from_domain(art), format_artifact(art))
    emit_svg(config, _drawing(art))
    return EXIT_OK
