"""Exact solving of unanimous instances, dispatched on the certificate kind."""

import logging
from typing import Literal

from tss_geo.errors import ContractViolation, InputError
from tss_geo.graphcore.geometry import (
    GridCoords,
    IntervalModel,
    intersection_graph_intervals,
)
from tss_geo.polysolve.grid import min_vertex_cover_grid
from tss_geo.polysolve.independent_set import max_independent_set_bb
from tss_geo.polysolve.interval import min_vertex_cover_interval
from tss_geo.tsscore.activation import is_target_set
from tss_geo.tsscore.instance import TSSInstance
from tss_geo.tsscore.oracle import TargetSetOptimum, min_target_set_bruteforce
from tss_geo.tsscore.thresholds import is_unanimous

logger = logging.getLogger(__name__)

Certificate = IntervalModel | GridCoords | None
Fallback = Literal["brute", "bb"]


def solve_unanimous(
    inst: TSSInstance,
    certificate: Certificate = None,
    *,
    fallback: Fallback = "brute",
    budget_seconds: float | None = None,
    workers: int = 1,
) -> TargetSetOptimum:
    """Minimum target set of a unanimous instance.

    With an interval model or grid coordinates the matching polynomial
    vertex-cover solver runs; otherwise the brute-force oracle (or, with
    ``fallback="bb"``, the complement of the branch-and-bound MIS).

    Raises:
        ContractViolation: if thresholds are not unanimous.
        InputError: if the certificate does not describe ``inst.graph``.
    """
    if not is_unanimous(inst):
        raise ContractViolation("solve_unanimous requires unanimous thresholds")
    g = inst.graph

    if isinstance(certificate, IntervalModel):
        if intersection_graph_intervals(certificate) != g:
            raise InputError("interval model does not realize the instance graph")
        cover = min_vertex_cover_interval(certificate)
        method = "interval"
    elif isinstance(certificate, GridCoords):
        cover = min_vertex_cover_grid(g, certificate)
        method = "grid"
    elif fallback == "bb":
        independent = max_independent_set_bb(g)
        cover = frozenset(v for v in g.vertices() if v not in independent)
        method = "mis-bb"
    else:
        optimum = min_target_set_bruteforce(
            inst, budget_seconds=budget_seconds, workers=workers
        )
        if optimum is None:
            raise AssertionError("V is always a target set")
        logger.info("unanimous solve via brute force: k_min=%d", optimum.k_min)
        return optimum

    witness = tuple(sorted(cover))
    if not is_target_set(inst, witness):
        raise AssertionError(f"{method} cover is not a target set")
    logger.info("unanimous solve via %s: k_min=%d", method, len(witness))
    return TargetSetOptimum(len(witness), witness)
