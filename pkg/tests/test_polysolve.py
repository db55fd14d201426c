"""Vertex cover / independent set solvers and the unanimous dispatcher."""

from __future__ import annotations

import random
from fractions import Fraction

import pytest

from tss_geo.errors import ContractViolation, InputError
from tss_geo.graphcore.geometry import (
    GridCoords,
    GridPoint,
    IntervalModel,
    intersection_graph_intervals,
)
from tss_geo.graphcore.graph import (
    Graph,
    complete_graph,
    cycle_graph,
    is_independent_set,
    is_vertex_cover,
    octahedron_graph,
    path_graph,
)
from tss_geo.harness.generators import (
    random_graph_er,
    random_grid_graph,
    random_interval_model,
)
from tss_geo.polysolve.dispatch import solve_unanimous
from tss_geo.polysolve.grid import min_vertex_cover_grid
from tss_geo.polysolve.independent_set import max_independent_set_bb
from tss_geo.polysolve.interval import (
    max_independent_set_interval,
    min_vertex_cover_interval,
)
from tss_geo.polysolve.vertex_cover import (
    VCInstance,
    max_independent_set_enumerate,
    min_vertex_cover_bruteforce,
    unanimous_tss_to_vc,
    vc_to_unanimous_tss,
)
from tss_geo.tsscore.activation import is_target_set
from tss_geo.tsscore.instance import TSSInstance
from tss_geo.tsscore.oracle import min_target_set_bruteforce

SEEDS = range(20)


@pytest.mark.parametrize("seed", SEEDS)
def test_unanimous_target_sets_are_vertex_covers(seed: int) -> None:
    rng = random.Random(seed)
    g = random_graph_er(rng, rng.randint(1, 10), 0.3)
    inst = TSSInstance.unanimous(g)

    cover = min_vertex_cover_bruteforce(g)
    optimum = min_target_set_bruteforce(inst)

    assert optimum is not None
    assert optimum.k_min == len(cover)
    assert is_target_set(inst, cover)
    assert is_vertex_cover(g, optimum.witness)


def test_vc_conversion_round_trips() -> None:
    inst = TSSInstance.unanimous(cycle_graph(5), 3)

    vc = unanimous_tss_to_vc(inst)

    assert vc == VCInstance(cycle_graph(5), 3)
    assert vc_to_unanimous_tss(vc) == inst
    assert vc.to_dict()["k"] == 3


def test_vc_conversion_rejects_non_unanimous_thresholds() -> None:
    with pytest.raises(ContractViolation, match="unanimous"):
        unanimous_tss_to_vc(TSSInstance.build(path_graph(3), [1, 1, 1]))


def test_interval_greedy_on_handmade_model() -> None:
    model = IntervalModel.from_pairs(
        [("0", "2"), ("1", "3"), ("5/2", "4"), ("4", "5"), ("6", "7")]
    )

    assert max_independent_set_interval(model) == [0, 2, 4]
    assert min_vertex_cover_interval(model) == frozenset({1, 3})


@pytest.mark.parametrize("seed", SEEDS)
def test_interval_cover_matches_bruteforce(seed: int) -> None:
    rng = random.Random(seed)
    model = random_interval_model(rng, rng.randint(1, 12))
    g = intersection_graph_intervals(model)

    cover = min_vertex_cover_interval(model)
    independent = max_independent_set_interval(model)

    assert is_vertex_cover(g, cover)
    assert len(cover) == len(min_vertex_cover_bruteforce(g))
    assert len(cover) + len(independent) == g.n
    assert is_independent_set(g, independent)


@pytest.mark.parametrize("seed", SEEDS)
def test_grid_cover_matches_bruteforce(seed: int) -> None:
    rng = random.Random(seed)
    g, coords = random_grid_graph(rng, rng.randint(1, 14))

    cover = min_vertex_cover_grid(g, coords)

    assert is_vertex_cover(g, cover)
    assert len(cover) == len(min_vertex_cover_bruteforce(g))
    assert len(cover) + len(max_independent_set_enumerate(g)) == g.n


def test_grid_cover_rejects_a_bad_certificate() -> None:
    coords = GridCoords((GridPoint(0, 0), GridPoint(2, 0)))
    with pytest.raises(InputError, match="invalid grid certificate"):
        min_vertex_cover_grid(path_graph(2), coords)


@pytest.mark.parametrize("seed", SEEDS)
def test_branch_and_bound_matches_enumeration(seed: int) -> None:
    rng = random.Random(seed)
    g = random_graph_er(rng, rng.randint(1, 16), rng.choice((0.15, 0.3, 0.5)))

    independent = max_independent_set_bb(g)

    assert is_independent_set(g, independent)
    assert len(independent) == len(max_independent_set_enumerate(g))


@pytest.mark.parametrize(
    ("g", "alpha"),
    [
        (Graph(0), 0),
        (complete_graph(6), 1),
        (cycle_graph(7), 3),
        (octahedron_graph(), 2),
        (path_graph(5), 3),
    ],
)
def test_branch_and_bound_known_values(g: Graph, alpha: int) -> None:
    assert len(max_independent_set_bb(g)) == alpha


def test_solve_unanimous_uses_the_interval_certificate() -> None:
    model = IntervalModel(tuple((Fraction(i), Fraction(i + 1)) for i in range(3)))
    inst = TSSInstance.unanimous(intersection_graph_intervals(model))

    optimum = solve_unanimous(inst, model)

    assert optimum.k_min == 1
    assert optimum.witness == (1,)


def test_solve_unanimous_rejects_a_foreign_interval_model() -> None:
    model = IntervalModel.from_pairs([("0", "1"), ("3", "4")])
    inst = TSSInstance.unanimous(path_graph(2))

    with pytest.raises(InputError, match="does not realize"):
        solve_unanimous(inst, model)


@pytest.mark.parametrize("fallback", ["brute", "bb"])
def test_solve_unanimous_fallbacks_agree(fallback: str) -> None:
    inst = TSSInstance.unanimous(octahedron_graph())

    optimum = solve_unanimous(inst, fallback=fallback)  # type: ignore[arg-type]

    assert optimum.k_min == 4
    assert is_target_set(inst, optimum.witness)


def test_solve_unanimous_with_grid_coords() -> None:
    rng = random.Random(7)
    g, coords = random_grid_graph(rng, 10)
    inst = TSSInstance.unanimous(g)

    optimum = solve_unanimous(inst, coords)
    reference = min_target_set_bruteforce(inst)

    assert reference is not None
    assert optimum.k_min == reference.k_min


def test_solve_unanimous_requires_unanimous_thresholds() -> None:
    with pytest.raises(ContractViolation, match="unanimous"):
        solve_unanimous(TSSInstance.build(path_graph(2), [0, 0]))
