"""``solve``: minimum target set of an instance file."""

import argparse
import logging
from pathlib import Path
from typing import Any

from tss_geo.cli.common import EXIT_NO, EXIT_OK, CommandConfig, emit
from tss_geo.cli.formatters import format_optimum
from tss_geo.errors import InputError
from tss_geo.formats import InstanceModel, SolveOutput, load_model
from tss_geo.polysolve.dispatch import solve_unanimous
from tss_geo.tsscore.instance import TSSInstance
from tss_geo.tsscore.oracle import (
    TargetSetOptimum,
    min_target_set_bruteforce,
    min_target_set_small_thresholds,
)
from tss_geo.tsscore.preprocess import preprocess_cap_thresholds

logger = logging.getLogger(__name__)

MODES = ("brute", "poly", "bb", "small")


def register(subparsers: Any) -> None:
    parser = subparsers.add_parser(
        "solve",
        help="minimum target set of an instance",
        description=(
            "brute: exact search for any thresholds; poly: unanimous instances "
            "with an interval or grid certificate; bb: unanimous via "
            "branch-and-bound MIS; small: all thresholds <= 1"
        ),
    )
    parser.add_argument("--in", dest="input", type=Path, required=True)
    parser.add_argument("--mode", choices=MODES, default="brute")
    parser.add_argument("--k-max", type=int, help="largest target set size to try")
    parser.add_argument(
        "--preprocess",
        action="store_true",
        help="remove vertices with t(v) > deg(v) first",
    )
    parser.add_argument("--out", type=Path)
    parser.set_defaults(handler=handle)


def _solve(
    inst: TSSInstance,
    model: InstanceModel,
    mode: str,
    k_max: int | None,
    config: CommandConfig,
) -> TargetSetOptimum | None:
    if mode == "brute":
        return min_target_set_bruteforce(
            inst, k_max, budget_seconds=config.oracle_budget, workers=config.workers
        )
    if mode == "small":
        try:
            return min_target_set_small_thresholds(inst)
        except ValueError as exc:
            raise InputError(str(exc)) from exc
    certificate = model.certificate() if mode == "poly" else None
    return solve_unanimous(
        inst,
        certificate,
        fallback="bb" if mode == "bb" else "brute",
        budget_seconds=config.oracle_budget,
        workers=config.workers,
    )


def handle(args: argparse.Namespace, config: CommandConfig) -> int:
    model = load_model(config.input(), InstanceModel)
    inst = model.to_domain()
    method = args.mode

    if args.preprocess:
        result = preprocess_cap_thresholds(inst)
        logger.info("preprocess removed %d forced vertices", result.budget_spent)
        if result.removed and args.mode == "poly":
            raise InputError("certificates do not survive vertex removal")
        if args.k_max is not None and args.k_max < result.budget_spent:
            optimum = None
        else:
            k_max = None if args.k_max is None else args.k_max - result.budget_spent
            optimum = _solve(result.instance, model, args.mode, k_max, config)
        if optimum is not None:
            witness = sorted(result.lift_target_set(optimum.witness))
            optimum = TargetSetOptimum(len(witness), tuple(witness))
        method = f"preprocess+{args.mode}"
    else:
        optimum = _solve(inst, model, args.mode, args.k_max, config)

    if optimum is None:
        output = SolveOutput(k_min=None, witness=[], method=method, feasible=False)
    else:
        output = SolveOutput(
            k_min=optimum.k_min, witness=list(optimum.witness), method=method
        )
    emit(config, output, format_optimum(output.k_min, output.witness, method))
    return EXIT_OK if output.feasible else EXIT_NO
