"""``gen``: seeded random instances in the wire formats."""

import argparse
import logging
import random
from pathlib import Path
from typing import Any

from tss_geo.cli.common import EXIT_OK, CommandConfig, emit
from tss_geo.embed.router import compute_embedding
from tss_geo.errors import InputError
from tss_geo.formats import (
    EmbeddingModel,
    FormulaModel,
    InstanceModel,
    dump_model,
)
from tss_geo.graphcore.geometry import (
    GridCoords,
    IntervalModel,
    intersection_graph_intervals,
)
from tss_geo.graphcore.graph import Graph
from tss_geo.harness.generators import (
    majority_thresholds,
    random_graph_er,
    random_grid_graph,
    random_interval_model,
    random_planar_graph,
    random_restricted_3sat,
    random_thresholds,
)
from tss_geo.services.storage import ArtifactStore
from tss_geo.tsscore.instance import TSSInstance

logger = logging.getLogger(__name__)

KINDS = ("er", "grid", "interval", "sat", "planar")
THRESHOLD_RULES = ("unanimous", "majority", "random")


def register(subparsers: Any) -> None:
    parser = subparsers.add_parser("gen", help="generate a random input file")
    parser.add_argument("kind", choices=KINDS)
    parser.add_argument("--n", type=int, required=True, help="vertices or variables")
    parser.add_argument("--p", type=float, default=0.3, help="edge probability (er)")
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--thresholds", choices=THRESHOLD_RULES, default="unanimous")
    parser.add_argument("--k", type=int, default=0, help="budget stored with it")
    parser.add_argument(
        "--dimacs", action="store_true", help="write sat formulas as DIMACS"
    )
    parser.add_argument(
        "--emb-out", type=Path, help="also embed a planar graph and write it here"
    )
    parser.add_argument("--out", type=Path)
    parser.set_defaults(handler=handle)


def _instance(rng: random.Random, g: Graph, rule: str, k: int) -> TSSInstance:
    if rule == "unanimous":
        return TSSInstance.unanimous(g, k)
    if rule == "majority":
        return TSSInstance.build(g, majority_thresholds(g), k)
    return TSSInstance.build(g, random_thresholds(rng, g), k)


def _check(args: argparse.Namespace) -> None:
    if args.n < 1:
        raise InputError(f"--n must be positive, got {args.n}")
    if not 0.0 <= args.p <= 1.0:
        raise InputError(f"--p must lie in [0, 1], got {args.p}")
    if args.k < 0:
        raise InputError(f"--k must be >= 0, got {args.k}")
    if args.dimacs and args.kind != "sat":
        raise InputError("--dimacs only applies to sat")
    if args.emb_out is not None and args.kind != "planar":
        raise InputError("--emb-out only applies to planar")


def handle(args: argparse.Namespace, config: CommandConfig) -> int:
    _check(args)
    rng = random.Random(config.seed)

    if args.kind == "sat":
        formula = random_restricted_3sat(rng, args.n)
        summary = f"{formula.num_vars} variables, {formula.num_clauses} clauses"
        if args.dimacs:
            if config.out is None:
                print(formula.to_dimacs(), end="")
            else:
                ArtifactStore.write_text(config.out, formula.to_dimacs())
                print(summary)
            return EXIT_OK
        emit(config, FormulaModel.from_domain(formula), summary)
        return EXIT_OK

    coords: GridCoords | None = None
    intervals: IntervalModel | None = None
    if args.kind == "er":
        g = random_graph_er(rng, args.n, args.p)
    elif args.kind == "grid":
        g, coords = random_grid_graph(rng, args.n)
    elif args.kind == "interval":
        intervals = random_interval_model(rng, args.n)
        g = intersection_graph_intervals(intervals)
    else:
        g = random_planar_graph(rng, args.n)

    inst = _instance(rng, g, args.thresholds, args.k)
    model = InstanceModel.from_domain(inst, coords=coords, intervals=intervals)
    emit(config, model, f"{args.kind}: {g.n} vertices, {g.num_edges} edges")

    if args.emb_out is not None:
        emb = compute_embedding(
            g, seed=config.embed_seed, attempts=config.embed_attempts
        )
        text = dump_model(EmbeddingModel.from_domain(emb))
        ArtifactStore.write_text(args.emb_out, text)
        logger.info("Embedding written to %s", args.emb_out)
    return EXIT_OK
