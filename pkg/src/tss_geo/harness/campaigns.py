"""Verification campaigns.

Equivalence campaigns draw every case from its own seeded generator, so a
case depends only on (seed, index). Cases may run in worker processes; the
report is merged in case-index order either way.
"""

import itertools
import logging
import random
import time
from collections.abc import Callable
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Any

from tss_geo.errors import InputError, OracleTimeout, ParseError, TSSGeoError
from tss_geo.graphcore.geometry import (
    DiskRepresentation,
    GeoPoint,
    GridPoint,
    intersection_graph_disks,
)
from tss_geo.graphcore.graph import Graph, path_graph
from tss_geo.harness.checks import CheckContext, create_check
from tss_geo.harness.report import CaseFailure, VerificationReport
from tss_geo.reduce.artifact import GADGET_NAMES, SubdivisionPlan
from tss_geo.reduce.cnf import CnfFormula
from tss_geo.reduce.disks import CHAIN_DIAMETER, CHAIN_LENGTHS, chain_centers, choose_w
from tss_geo.reduce.majority import majority_transform
from tss_geo.reduce.sat import GADGET_SIZE, gadget_vertex, sat_to_planar_tss
from tss_geo.services.journal import CaseJournal
from tss_geo.services.storage import ArtifactStore
from tss_geo.tsscore.activation import is_target_set, simulate
from tss_geo.tsscore.instance import ActivationTrace, TSSInstance
from tss_geo.tsscore.oracle import min_target_set_bruteforce

logger = logging.getLogger(__name__)

PASSED = "passed"
SKIPPED = "skipped"
FAILED = "failed"


def case_seed(seed: int, index: int) -> int:
    """Seed of case ``index``; independent of trial count and worker count."""
    return seed * 1_000_003 + index


@dataclass(slots=True)
class CaseOutcome:
    status: str
    problems: list[str] = field(default_factory=list)
    elapsed: float = 0.0


def run_case(
    check_id: str, encoded: dict[str, Any], budget_seconds: float | None
) -> CaseOutcome:
    """Decode and run one case; picklable entry point for worker processes."""
    started = time.monotonic()
    check = create_check(check_id)
    ctx = CheckContext(budget_seconds=budget_seconds)
    try:
        problems = check.check(check.decode(encoded), ctx)
    except OracleTimeout as exc:
        return CaseOutcome(SKIPPED, [str(exc)], time.monotonic() - started)
    except (TSSGeoError, AssertionError) as exc:
        problems = [f"{type(exc).__name__}: {exc}"]
    status = FAILED if problems else PASSED
    return CaseOutcome(status, problems, time.monotonic() - started)


def _record(
    report: VerificationReport,
    index: int,
    outcome: CaseOutcome,
    payload: dict[str, Any],
    store: ArtifactStore | None,
    journal: CaseJournal | None,
) -> None:
    if outcome.status == PASSED:
        report.record_pass()
    elif outcome.status == SKIPPED:
        logger.warning(
            "%s case %d skipped: %s", report.campaign, index, outcome.problems
        )
        report.record_skip(f"case {index}: {'; '.join(outcome.problems)}")
    else:
        message = "; ".join(outcome.problems)
        logger.error("%s case %d failed: %s", report.campaign, index, message)
        path = store.write_repro(report.campaign, index, payload) if store else None
        case_seed_used = payload.get("case_seed", report.seed)
        report.record_failure(
            CaseFailure(index, case_seed_used, message, payload, path)
        )
    if journal is not None:
        journal.append(
            index,
            outcome.status,
            seed=payload.get("case_seed"),
            elapsed=round(outcome.elapsed, 3),
        )


def verify_equivalence(
    check_id: str,
    *,
    seed: int = 0,
    trials: int = 50,
    size: int | None = None,
    budget_seconds: float | None = 10.0,
    workers: int = 1,
    store: ArtifactStore | None = None,
    journal: CaseJournal | None = None,
) -> VerificationReport:
    """Run ``trials`` generated cases of one check.

    Args:
        check_id: Registered check id (see ``CHECK_IDS``).
        seed: Campaign seed; case i uses ``case_seed(seed, i)``.
        trials: Number of cases.
        size: Largest source size; defaults to the check's own default.
        budget_seconds: Oracle budget per case; timeouts are reported as skips.
        workers: Worker processes for independent cases.
        store: Where to write repro files of failing cases.
        journal: Optional JSONL record of every case outcome.

    Raises:
        ValueError: for an unknown check id.
        InputError: if ``size`` is outside the check's oracle range.
    """
    check = create_check(check_id)
    bound = check.default_size if size is None else size
    if not 1 <= bound <= check.max_size:
        raise InputError(
            f"size {bound} outside the oracle range 1..{check.max_size} of {check_id}",
            details={"size": bound, "max_size": check.max_size},
        )
    started = time.monotonic()
    report = VerificationReport(campaign=check_id, seed=seed)

    payloads = []
    for i in range(trials):
        rng = random.Random(case_seed(seed, i))
        case = check.generate(rng, bound, i)
        payloads.append(
            {
                "campaign": check_id,
                "check": check_id,
                "seed": seed,
                "case": i,
                "case_seed": case_seed(seed, i),
                "size": bound,
                "input": check.encode(case),
            }
        )
    logger.info(
        "verify %s: %d cases (seed=%d, size<=%d, workers=%d)",
        check_id,
        trials,
        seed,
        bound,
        workers,
    )

    ids = [check_id] * trials
    inputs = [p["input"] for p in payloads]
    budgets = [budget_seconds] * trials
    if workers > 1 and trials > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            outcomes = list(pool.map(run_case, ids, inputs, budgets))
    else:
        outcomes = [run_case(*args) for args in zip(ids, inputs, budgets, strict=True)]

    for i, (outcome, payload) in enumerate(zip(outcomes, payloads, strict=True)):
        _record(report, i, outcome, payload, store, journal)
    report.wall_time = time.monotonic() - started
    logger.info("%s", report.summary())
    return report


@dataclass(frozen=True, slots=True)
class _Property:
    name: str
    run: Callable[[], list[str]]


def _round(trace: ActivationTrace, r: int) -> frozenset[int]:
    return trace.rounds[min(r, len(trace.rounds) - 1)]


def _gadget_properties() -> list[_Property]:
    """Simulation checks on one variable gadget with its three clause stubs."""
    art = sat_to_planar_tss(CnfFormula.of(1, [[1], [1], [-1]]))
    inst = art.require_instance()
    v = {name: gadget_vertex(0, name) for name in GADGET_NAMES}
    gadget = set(range(GADGET_SIZE))
    stubs = set(range(GADGET_SIZE, inst.n))

    def within_four(seed: str, names: tuple[str, ...], last: str) -> list[str]:
        trace = simulate(inst, {v[seed]})
        problems = []
        missing = [x for x in names if v[x] not in _round(trace, 4)]
        if missing:
            problems.append(f"seed {seed}: {missing} not active after 4 rounds")
        if trace.activation_round(v[last]) != 4:
            got = trace.activation_round(v[last])
            problems.append(f"seed {seed}: {last} activated in round {got}, not 4")
        return problems

    def blocked() -> list[str]:
        final = simulate(inst, stubs).final
        return [f"{x} activated from the boundary" for x in ("T", "F") if v[x] in final]

    def spreads(*names: str) -> Callable[[], list[str]]:
        def run() -> list[str]:
            final = simulate(inst, {v[x] for x in names}).final
            missing = sorted(gadget - final)
            if not missing:
                return []
            return [f"seed {names}: gadget vertices {missing} stay inactive"]

        return run

    return [
        _Property(
            "true_side_from_T",
            lambda: within_four("T", ("a", "b", "c", "d", "t"), "t"),
        ),
        _Property(
            "false_side_from_F",
            lambda: within_four("F", ("p3", "p2", "p1", "f"), "f"),
        ),
        _Property("boundary_cannot_reach_T_or_F", blocked),
        _Property("F_and_t_activate_gadget", spreads("F", "t")),
        _Property("T_and_f_activate_gadget", spreads("T", "f")),
    ]


def _chain_property(length: int) -> _Property:
    def run() -> list[str]:
        p, q = GridPoint(0, 0), GridPoint(1, 0)
        centers = chain_centers(p, q, length)
        problems = []
        if centers[0] != GeoPoint(CHAIN_DIAMETER, Fraction(0)):
            problems.append(f"first center {centers[0]} is not at distance 1/7")
        if centers[-1] != GeoPoint(1 - CHAIN_DIAMETER, Fraction(0)):
            problems.append(f"last center {centers[-1]} is not at distance 6/7")
        rep = DiskRepresentation(
            CHAIN_DIAMETER, (p.to_geo(), *centers, q.to_geo())
        )
        if intersection_graph_disks(rep) != path_graph(length + 2):
            problems.append("chain disks do not intersect as a path")
        return problems

    return _Property(f"disk_chain_{length}", run)


_CHERRY_INSTANCES: tuple[tuple[Graph, tuple[int, ...]], ...] = (
    (path_graph(2), (0, 0)),
    (Graph(4, [(0, 1), (0, 2), (0, 3)]), (0, 1, 1, 1)),
    (Graph(3, [(0, 1), (1, 2), (0, 2)]), (1, 0, 0)),
)


def _cherry_property(index: int, g: Graph, thresholds: tuple[int, ...]) -> _Property:
    """Every optimal target set of the transformed instance hits every cherry."""

    def run() -> list[str]:
        art = majority_transform(TSSInstance.build(g, thresholds))
        out = art.require_instance()
        optimum = min_target_set_bruteforce(out)
        if optimum is None:
            return ["transformed instance has no target set"]
        groups: dict[int, set[int]] = {}
        for w, role in enumerate(art.provenance):
            if role.kind == "cherry":
                groups.setdefault(role.ref[0], set()).add(w)
        problems = []
        for subset in itertools.combinations(range(out.n), optimum.k_min):
            if not is_target_set(out, subset):
                continue
            chosen = set(subset)
            missed = [c for c, members in groups.items() if not members & chosen]
            if missed:
                problems.append(f"optimal set {list(subset)} misses cherries {missed}")
        return problems

    return _Property(f"cherry_pigeonhole_{index}", run)


def _run_properties(
    campaign: str,
    properties: list[_Property],
    store: ArtifactStore | None,
) -> VerificationReport:
    started = time.monotonic()
    report = VerificationReport(campaign=campaign)
    for i, prop in enumerate(properties):
        try:
            problems = prop.run()
        except (TSSGeoError, AssertionError) as exc:
            problems = [f"{type(exc).__name__}: {exc}"]
        payload = {"campaign": campaign, "case": i, "property": prop.name}
        outcome = CaseOutcome(FAILED if problems else PASSED, problems)
        _record(report, i, outcome, payload, store, None)
    report.wall_time = time.monotonic() - started
    logger.info("%s", report.summary())
    return report


def verify_gadgets(store: ArtifactStore | None = None) -> VerificationReport:
    """Gadget activation properties, disk-chain lengths and cherry budgets."""
    properties = _gadget_properties()
    properties.extend(_chain_property(length) for length in CHAIN_LENGTHS)
    properties.extend(
        _cherry_property(i, g, t) for i, (g, t) in enumerate(_CHERRY_INSTANCES)
    )
    return _run_properties("gadgets", properties, store)


def _mod6_property(g: int) -> _Property:
    def run() -> list[str]:
        w = choose_w(g)
        problems = []
        if len(w) != g - 1:
            problems.append(f"g={g}: {len(w)} weights, expected {g - 1}")
        if any(x not in CHAIN_LENGTHS for x in w):
            problems.append(f"g={g}: weights {w} leave 6..9")
        if (g - 2 + sum(w)) % 6:
            problems.append(f"g={g}: g - 2 + sum(w) = {g - 2 + sum(w)} not 0 mod 6")
        if not problems:
            SubdivisionPlan.for_length(g, w)
        return problems

    return _Property(f"g={g}", run)


def verify_mod6(
    g_max: int = 1000, store: ArtifactStore | None = None
) -> VerificationReport:
    """choose_w range, length and congruence for every g in [2, g_max].

    Raises:
        InputError: if ``g_max < 2``.
    """
    if g_max < 2:
        raise InputError(f"g_max must be >= 2, got {g_max}")
    return _run_properties(
        "mod6", [_mod6_property(g) for g in range(2, g_max + 1)], store
    )


def replay(path: Path, budget_seconds: float | None = None) -> VerificationReport:
    """Re-run the case stored in a repro file.

    Property campaigns are deterministic and are re-run whole.

    Raises:
        InputError: if the file cannot be read.
        ParseError: if it is not a repro payload.
    """
    payload = ArtifactStore.read_repro(path)
    campaign = payload.get("campaign")
    if campaign == "gadgets":
        return verify_gadgets()
    if campaign == "mod6":
        return verify_mod6()
    check_id = payload.get("check")
    encoded = payload.get("input")
    if not isinstance(check_id, str) or not isinstance(encoded, dict):
        raise ParseError(
            f"{path}: not a repro payload", details={"keys": sorted(payload)}
        )
    try:
        create_check(check_id)
    except ValueError as exc:
        raise ParseError(f"{path}: {exc}") from exc

    started = time.monotonic()
    report = VerificationReport(
        campaign=f"replay:{check_id}", seed=int(payload.get("seed", 0))
    )
    index = int(payload.get("case", 0))
    outcome = run_case(check_id, encoded, budget_seconds)
    _record(report, index, outcome, payload, None, None)
    report.wall_time = time.monotonic() - started
    logger.info("%s", report.summary())
    return report
