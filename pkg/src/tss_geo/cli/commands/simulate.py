"""``simulate``: run the activation process from a seed set."""

import argparse
from pathlib import Path
from typing import Any

from tss_geo.cli.common import (
    EXIT_NO,
    EXIT_OK,
    CommandConfig,
    emit,
    parse_vertex_list,
)
from tss_geo.cli.formatters import format_trace
from tss_geo.formats import InstanceModel, TraceModel, load_model
from tss_geo.tsscore.activation import simulate


def register(subparsers: Any) -> None:
    parser = subparsers.add_parser("simulate", help="activation trace of a seed set")
    parser.add_argument("--in", dest="input", type=Path, required=True)
    parser.add_argument(
        "--seed-set",
        default="",
        help="comma-separated seed vertices, e.g. 0,3",
    )
    parser.add_argument("--out", type=Path)
    parser.set_defaults(handler=handle)


def handle(args: argparse.Namespace, config: CommandConfig) -> int:
    inst = load_model(config.input(), InstanceModel).to_domain()
    trace = simulate(inst, parse_vertex_list(args.seed_set))
    output = TraceModel.from_domain(trace, inst.n)
    emit(config, output, format_trace(trace, inst.n))
    return EXIT_OK if output.complete else EXIT_NO
