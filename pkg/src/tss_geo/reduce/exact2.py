"""Majority grid instances to exact-2 unit disk instances via leaf disks."""

import logging
from collections.abc import Iterable
from fractions import Fraction

from tss_geo.errors import ContractViolation, InputError
from tss_geo.graphcore.geometry import (
    UNIT_STEPS,
    DiskRepresentation,
    GeoPoint,
    GridCoords,
    GridPoint,
    intersection_graph_disks,
    squared_distance,
)
from tss_geo.graphcore.graph import Edge
from tss_geo.graphcore.validators import validate_grid_graph
from tss_geo.reduce.artifact import BudgetRecord, ReductionArtifact, Role
from tss_geo.tsscore.activation import is_target_set
from tss_geo.tsscore.instance import TSSInstance
from tss_geo.tsscore.preprocess import preprocess_cap_thresholds
from tss_geo.tsscore.thresholds import is_majority

logger = logging.getLogger(__name__)

LEAF_OFFSET = Fraction(1, 5)
BASE_DIAMETER = Fraction(1)


def _leaf_center(p: GridPoint, direction: tuple[int, int]) -> GeoPoint:
    dx, dy = direction
    return p.to_geo().translate(LEAF_OFFSET * dx, LEAF_OFFSET * dy)


def _place_leaves(fixed: list[int], coords: GridCoords) -> list[tuple[int, int]]:
    """Pick one free direction per fixed vertex with pairwise disjoint leaves.

    Directions are tried in the order of ``UNIT_STEPS``; conflicts undo the
    latest choice (backtracking). Only leaves of grid-neighbouring parents can
    meet, so each candidate is compared against the 3x3 box around it.

    Raises:
        ContractViolation: if no conflict-free choice exists.
    """
    occupied = set(coords.coord)
    options: list[list[tuple[int, int]]] = []
    for v in fixed:
        p = coords.coord[v]
        free = [d for d in UNIT_STEPS if p.step(*d) not in occupied]
        if not free:
            raise ContractViolation(
                f"vertex {v} has no free direction for its leaf",
                details={"vertex": v},
            )
        options.append(free)

    placed: dict[GridPoint, GeoPoint] = {}
    choice = [-1] * len(fixed)
    i = 0
    while 0 <= i < len(fixed):
        p = coords.coord[fixed[i]]
        placed.pop(p, None)
        nearby = [
            placed[q]
            for dx in (-1, 0, 1)
            for dy in (-1, 0, 1)
            if (q := p.step(dx, dy)) in placed
        ]
        nxt = choice[i] + 1
        while nxt < len(options[i]):
            center = _leaf_center(p, options[i][nxt])
            if all(squared_distance(center, c) > 1 for c in nearby):
                break
            nxt += 1
        if nxt < len(options[i]):
            choice[i] = nxt
            placed[p] = _leaf_center(p, options[i][nxt])
            i += 1
        else:
            choice[i] = -1
            i -= 1
    if i < 0:
        raise ContractViolation(
            "no conflict-free leaf placement exists", details={"fixed": fixed}
        )
    return [options[i][c] for i, c in enumerate(choice)]


def majority_grid_to_exact2_udg(
    inst: TSSInstance, coords: GridCoords
) -> ReductionArtifact:
    """Raise every threshold-1 vertex to 2 and hang a forced leaf disk on it.

    Base disks have diameter 1 at the grid points. A leaf sits at
    p + (1/5) d for the first usable axis direction d, gets threshold 2 and
    is therefore forced into every target set: k' = k + z for z leaves.
    Capping thresholds on the output recovers the input exactly.

    Raises:
        InputError: if ``coords`` do not realize the graph as a grid graph.
        ContractViolation: if the instance is not majority, has an isolated
            vertex, or admits no leaf placement.
    """
    g = inst.graph
    report = validate_grid_graph(g, coords)
    if not report.ok:
        raise InputError(
            "coordinates do not realize a grid graph", details=report.to_dict()
        )
    if not is_majority(inst):
        raise ContractViolation("exact-2 reduction needs majority thresholds")
    isolated = [v for v in g.vertices() if g.degree(v) == 0]
    if isolated:
        raise ContractViolation(
            "isolated vertices cannot carry threshold 2",
            details={"vertices": isolated},
        )

    fixed = [v for v in g.vertices() if inst.thresholds[v] == 1]
    directions = _place_leaves(fixed, coords)
    z = len(fixed)

    thresholds = [2] * (g.n + z)
    centers = [p.to_geo() for p in coords.coord]
    roles = [Role.original(v) for v in g.vertices()]
    extra: list[Edge] = []
    for i, (v, d) in enumerate(zip(fixed, directions, strict=True)):
        centers.append(_leaf_center(coords.coord[v], d))
        roles.append(Role.leaf(v))
        extra.append((v, g.n + i))

    out_graph = g.with_edges(g.n + z, extra)
    rep = DiskRepresentation(BASE_DIAMETER, tuple(centers))
    if intersection_graph_disks(rep) != out_graph:
        raise AssertionError("leaf disks touch more than their parents")
    out = TSSInstance.build(out_graph, thresholds, inst.budget + z)
    if preprocess_cap_thresholds(out).instance != inst:
        raise AssertionError("threshold capping does not recover the input")
    logger.info("grid2exact2: n=%d, z=%d leaves, k'=%d", g.n, z, out.budget)
    return ReductionArtifact(
        reduction="grid2exact2",
        graph=out_graph,
        k=out.budget,
        provenance=tuple(roles),
        budget=BudgetRecord("k' = k + z", (("k", inst.budget), ("z", z))),
        instance=out,
        counters={"z": z},
        disks=rep,
        source=inst,
    )


def exact2_lift_witness(art: ReductionArtifact, seed: Iterable[int]) -> set[int]:
    """Every leaf exceeds its degree, so S' = S plus all leaves."""
    return set(seed) | set(art.vertices_of_kind("leaf"))


def exact2_project_witness(art: ReductionArtifact, seed: Iterable[int]) -> set[int]:
    """Drop the leaf seeds of a target set of the output.

    Raises:
        ContractViolation: if ``seed`` is not a target set of the output.
    """
    chosen = art.graph.check_vertices(seed)
    if not is_target_set(art.require_instance(), chosen):
        raise ContractViolation(
            "exact-2 projection requires a target set of the output",
            details={"seed": sorted(chosen)},
        )
    n = len(art.vertices_of_kind("original"))
    return {v for v in chosen if v < n}
