"""``verify``: randomized equivalence campaigns, gadget and mod-6 checks, replay."""

import argparse
import json
import logging
from pathlib import Path
from typing import Any

from tss_geo.cli.common import EXIT_NO, EXIT_OK, CommandConfig
from tss_geo.harness import (
    CHECK_IDS,
    VerificationReport,
    replay,
    verify_equivalence,
    verify_gadgets,
    verify_mod6,
)
from tss_geo.services.journal import CaseJournal
from tss_geo.services.storage import ArtifactStore

logger = logging.getLogger(__name__)


def register(subparsers: Any) -> None:
    parser = subparsers.add_parser("verify", help="run verification campaigns")
    campaigns = parser.add_subparsers(dest="campaign", required=True)

    equivalence = campaigns.add_parser(
        "equivalence", help="random cases of one reduction or solver check"
    )
    equivalence.add_argument("check", choices=CHECK_IDS)
    equivalence.add_argument("--seed", type=int, default=0)
    equivalence.add_argument("--trials", type=int, default=50)
    equivalence.add_argument("--size", type=int, help="source instance size")
    equivalence.add_argument(
        "--journal", action="store_true", help="append case outcomes as JSONL"
    )
    equivalence.add_argument("--repro-dir", type=Path)
    equivalence.add_argument("--out", type=Path)

    gadgets = campaigns.add_parser("gadgets", help="gadget and chain properties")
    gadgets.add_argument("--repro-dir", type=Path)
    gadgets.add_argument("--out", type=Path)

    mod6 = campaigns.add_parser("mod6", help="chain length congruence table")
    mod6.add_argument("--g-max", type=int, default=1000)
    mod6.add_argument("--repro-dir", type=Path)
    mod6.add_argument("--out", type=Path)

    again = campaigns.add_parser("replay", help="re-run a stored failing case")
    again.add_argument("--case", type=Path, required=True)
    again.add_argument("--out", type=Path)

    parser.set_defaults(handler=handle)


def _run(args: argparse.Namespace, config: CommandConfig) -> VerificationReport:
    store = ArtifactStore(config.output_dir)
    if args.campaign == "equivalence":
        journal = None
        if args.journal:
            journal = CaseJournal(config.output_dir, f"equivalence-{args.check}")
        return verify_equivalence(
            args.check,
            seed=config.seed,
            trials=args.trials,
            size=args.size,
            budget_seconds=config.oracle_budget,
            workers=config.workers,
            store=store,
            journal=journal,
        )
    if args.campaign == "gadgets":
        return verify_gadgets(store=store)
    if args.campaign == "mod6":
        return verify_mod6(args.g_max, store=store)
    return replay(config.input("case"), budget_seconds=config.oracle_budget)


def handle(args: argparse.Namespace, config: CommandConfig) -> int:
    report = _run(args, config)
    print(report.summary())
    for failure in report.failures:
        logger.error(
            "case %d (seed %d): %s", failure.case, failure.seed, failure.message
        )
    if config.out is not None:
        text = json.dumps(report.to_dict(), indent=2, sort_keys=True) + "\n"
        ArtifactStore.write_text(config.out, text)
        logger.info("Report written to %s", config.out)
    return EXIT_OK if report.ok else EXIT_NO
