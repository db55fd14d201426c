"""Majority transform, grid subdivision, disk chains, exact-2 leaves, registry."""

from __future__ import annotations

import random
from collections.abc import Callable
from fractions import Fraction

import pytest

from tss_geo.embed.embedding import RectilinearEmbedding
from tss_geo.errors import ContractViolation, InputError
from tss_geo.graphcore.geometry import (
    GeoPoint,
    GridCoords,
    GridPoint,
    intersection_graph_disks,
    intersection_graph_grid_points,
)
from tss_geo.graphcore.graph import (
    Graph,
    check_regular,
    complete_graph,
    cycle_graph,
    is_independent_set,
    path_graph,
)
from tss_geo.graphcore.validators import validate_grid_graph
from tss_geo.harness.generators import (
    k4_embedding,
    near_majority_thresholds,
    octahedron_embedding,
    random_graph_er,
)
from tss_geo.polysolve.independent_set import max_independent_set_bb
from tss_geo.reduce.disks import (
    chain_centers,
    choose_w,
    clique_blowup_is,
    is_lift_witness,
    is_planar_to_is_udg,
    is_project_witness,
    regular_exact_c_tss,
)
from tss_geo.reduce.exact2 import (
    exact2_lift_witness,
    exact2_project_witness,
    majority_grid_to_exact2_udg,
)
from tss_geo.reduce.majority import (
    cherry_middles,
    majority_lift_witness,
    majority_project_witness,
    majority_transform,
)
from tss_geo.reduce.registry import (
    REDUCTION_IDS,
    ReductionInput,
    create_reduction,
)
from tss_geo.reduce.subdivision import (
    grid_lift_witness,
    grid_project_witness,
    planar_tss_to_grid_tss,
    subdivide_edge_once,
)
from tss_geo.tsscore.activation import is_target_set
from tss_geo.tsscore.instance import TSSInstance
from tss_geo.tsscore.oracle import min_target_set_bruteforce
from tss_geo.tsscore.preprocess import preprocess_cap_thresholds
from tss_geo.tsscore.thresholds import is_majority

EmbeddingFactory = Callable[[], tuple[Graph, RectilinearEmbedding]]


def _grid_path(length: int) -> tuple[Graph, GridCoords]:
    points = tuple(GridPoint(x, 0) for x in range(length))
    return intersection_graph_grid_points(points), GridCoords(points)


def test_majority_transform_on_a_handmade_path() -> None:
    # vertex 0 sits below its majority, vertex 1 above it
    inst = TSSInstance.build(path_graph(3), [0, 2, 1], 1)

    art = majority_transform(inst)
    out = art.require_instance()

    assert art.counters == {"alpha": 1, "leaves": 2, "raised": 1}
    assert out.n == 3 + 3 + 2
    assert out.budget == art.k == 2
    assert is_majority(out)
    assert out.thresholds[0] == 1
    assert len(cherry_middles(art)) == 1

    source = min_target_set_bruteforce(inst)
    target = min_target_set_bruteforce(out)
    assert source is not None and target is not None
    assert target.k_min == source.k_min + 1


@pytest.mark.parametrize("seed", range(10))
def test_majority_witnesses_translate_both_ways(seed: int) -> None:
    rng = random.Random(seed)
    g = random_graph_er(rng, 6, 0.4)
    inst = TSSInstance.build(g, near_majority_thresholds(rng, g))
    optimum = min_target_set_bruteforce(inst)
    assert optimum is not None

    art = majority_transform(inst)
    out = art.require_instance()
    alpha = art.counters["alpha"]
    lifted = majority_lift_witness(art, optimum.witness)
    projected = majority_project_witness(art, lifted)

    assert is_majority(out)
    assert art.k == inst.budget + alpha
    assert len(lifted) == optimum.k_min + alpha
    assert is_target_set(out, lifted)
    assert projected == set(optimum.witness)
    assert is_target_set(inst, projected)


def test_majority_projection_requires_a_target_set() -> None:
    art = majority_transform(TSSInstance.build(path_graph(3), [0, 2, 1]))

    with pytest.raises(ContractViolation, match="target set"):
        majority_project_witness(art, [])


def test_subdivide_edge_once_adds_a_relay_vertex() -> None:
    inst = TSSInstance.build(path_graph(2), [1, 1], 1)

    out, step = subdivide_edge_once(inst, (1, 0))

    assert out.n == 3
    assert out.thresholds == (1, 1, 1)
    assert out.graph.sorted_edges == ((0, 2), (1, 2))
    assert step.lift({0}) == {0}
    assert step.project(out, {2}) == {0}
    with pytest.raises(InputError, match="not in the graph"):
        subdivide_edge_once(out, (0, 1))


@pytest.mark.parametrize("thresholds", [(3, 3, 3, 3), (1, 2, 3, 2), (1, 1, 1, 1)])
def test_planar_to_grid_preserves_the_optimum(thresholds: tuple[int, ...]) -> None:
    g, emb = k4_embedding()
    inst = TSSInstance.build(g, thresholds, 2)

    art = planar_tss_to_grid_tss(inst, emb)
    out = art.require_instance()
    assert art.coords is not None

    lengths = [len(emb.epath[e]) for e in g.sorted_edges]
    assert out.n == g.n + sum(2 * length - 3 for length in lengths)
    assert validate_grid_graph(art.graph, art.coords).ok
    assert out.budget == 2
    assert art.counters["phase2"] == sum(length - 1 for length in lengths)

    source = min_target_set_bruteforce(inst)
    assert source is not None
    target = min_target_set_bruteforce(out, source.k_min)
    assert target is not None
    assert target.k_min == source.k_min
    assert is_target_set(out, grid_lift_witness(art, source.witness))
    projected = grid_project_witness(art, target.witness)
    assert len(projected) <= source.k_min
    assert is_target_set(inst, projected)


def test_planar_to_grid_rejects_a_foreign_embedding() -> None:
    _, emb = octahedron_embedding()

    with pytest.raises(InputError, match="invalid rectilinear embedding"):
        planar_tss_to_grid_tss(TSSInstance.unanimous(complete_graph(4)), emb)


def test_grid_projection_pulls_chain_seeds_onto_endpoints() -> None:
    g, emb = k4_embedding()
    art = planar_tss_to_grid_tss(TSSInstance.build(g, [1, 1, 1, 1]), emb)
    chain_vertex = g.n

    projected = grid_project_witness(art, {chain_vertex})

    assert len(projected) == 1
    assert projected <= set(art.provenance[chain_vertex].edge)


def test_choose_w_closes_every_chain_length() -> None:
    for g in range(2, 1001):
        w = choose_w(g)
        assert len(w) == g - 1
        assert all(6 <= x <= 9 for x in w)
        assert (g - 2 + sum(w)) % 6 == 0
    with pytest.raises(InputError, match=">= 2"):
        choose_w(1)


@pytest.mark.parametrize("length", [6, 7, 8, 9])
def test_chain_centers_hug_the_segment_ends(length: int) -> None:
    centers = chain_centers(GridPoint(0, 0), GridPoint(1, 0), length)

    assert len(centers) == length
    assert centers[0] == GeoPoint(Fraction(1, 7), Fraction(0))
    assert centers[-1] == GeoPoint(Fraction(6, 7), Fraction(0))
    gaps = [b.x - a.x for a, b in zip(centers, centers[1:], strict=False)]
    assert all(0 < gap <= Fraction(1, 7) for gap in gaps)


def test_chain_centers_reject_bad_input() -> None:
    with pytest.raises(InputError, match="not adjacent"):
        chain_centers(GridPoint(0, 0), GridPoint(1, 1), 6)
    with pytest.raises(InputError, match="6..9"):
        chain_centers(GridPoint(0, 0), GridPoint(0, 1), 5)


@pytest.mark.parametrize(
    ("factory", "r"), [(k4_embedding, 3), (octahedron_embedding, 4)]
)
def test_is_to_udg_builds_a_regular_unit_disk_graph(
    factory: EmbeddingFactory, r: int
) -> None:
    g, emb = factory()

    art = is_planar_to_is_udg(g, r, emb, k=1)

    assert art.disks is not None
    assert check_regular(art.graph, r)
    assert intersection_graph_disks(art.disks) == art.graph
    assert set(art.plans) == g.edges
    assert all(plan.y_e % 6 == 0 for plan in art.plans.values())
    extra = sum(3 * plan.q_e for plan in art.plans.values())
    assert art.k == 1 + extra
    chain = sum(plan.y_e for plan in art.plans.values())
    assert art.graph.n == g.n + chain + (r - 2) * chain // 3

    independent = max_independent_set_bb(g)
    lifted = is_lift_witness(art, independent)
    assert is_independent_set(art.graph, lifted)
    assert len(lifted) == len(independent) + extra
    assert is_project_witness(art, lifted) == set(independent)


def test_is_to_udg_k4_plan_lengths() -> None:
    g, emb = k4_embedding()

    art = is_planar_to_is_udg(g, 3, emb)

    # polylines of 2, 3, 3, 3, 8 and 6 points
    assert sorted(plan.q_e for plan in art.plans.values()) == [1, 3, 3, 3, 6, 8]
    assert art.counters["sum_3q"] == 72


@pytest.mark.slow
def test_is_to_udg_shifts_the_independence_number() -> None:
    g, emb = k4_embedding()

    art = is_planar_to_is_udg(g, 3, emb)

    assert len(max_independent_set_bb(art.graph)) == 1 + 72


def test_is_to_udg_rejects_bad_input() -> None:
    g, emb = k4_embedding()
    with pytest.raises(InputError, match="3 or 4"):
        is_planar_to_is_udg(g, 5, emb)
    with pytest.raises(ContractViolation, match="4-regular"):
        is_planar_to_is_udg(g, 4, emb)


def test_is_projection_requires_independence() -> None:
    g, emb = k4_embedding()
    art = is_planar_to_is_udg(g, 3, emb)

    with pytest.raises(ContractViolation, match="independent"):
        is_project_witness(art, [0, g.n])
    with pytest.raises(ContractViolation, match="independent"):
        is_lift_witness(art, [0, 1])


def test_exact2_hangs_one_leaf_per_threshold_one_vertex() -> None:
    g, coords = _grid_path(3)
    inst = TSSInstance.build(g, [1, 1, 1], 1)

    art = majority_grid_to_exact2_udg(inst, coords)
    out = art.require_instance()

    assert art.counters == {"z": 3}
    assert out.n == 6
    assert set(out.thresholds) == {2}
    assert art.k == out.budget == 4
    assert art.disks is not None
    assert intersection_graph_disks(art.disks) == art.graph
    assert preprocess_cap_thresholds(out).instance == inst

    source = min_target_set_bruteforce(inst)
    target = min_target_set_bruteforce(out)
    assert source is not None and target is not None
    assert target.k_min == source.k_min + 3
    lifted = exact2_lift_witness(art, source.witness)
    assert is_target_set(out, lifted)
    assert exact2_project_witness(art, target.witness) <= {0, 1, 2}
    assert is_target_set(inst, exact2_project_witness(art, target.witness))


def test_exact2_projection_requires_a_target_set() -> None:
    g, coords = _grid_path(3)
    art = majority_grid_to_exact2_udg(TSSInstance.build(g, [1, 1, 1]), coords)
    leaves = art.vertices_of_kind("leaf")

    # each original still needs one original neighbour besides its leaf
    assert not is_target_set(art.require_instance(), leaves)
    with pytest.raises(ContractViolation, match="target set of the output"):
        exact2_project_witness(art, leaves)
    assert exact2_project_witness(art, [*leaves, 1]) == {1}


def test_exact2_rejects_non_majority_and_isolated_vertices() -> None:
    g, coords = _grid_path(3)
    with pytest.raises(ContractViolation, match="majority"):
        majority_grid_to_exact2_udg(TSSInstance.build(g, [1, 2, 1]), coords)

    lonely = GridCoords((GridPoint(0, 0), GridPoint(5, 5)))
    with pytest.raises(ContractViolation, match="isolated"):
        majority_grid_to_exact2_udg(TSSInstance.build(Graph(2), [0, 0]), lonely)

    with pytest.raises(InputError, match="grid graph"):
        majority_grid_to_exact2_udg(TSSInstance.build(g, [1, 1, 1]), lonely)


def test_clique_blowup_keeps_independence_and_disks() -> None:
    g = path_graph(3)
    coords = GridCoords(tuple(GridPoint(x, 0) for x in range(3)))

    blown, disks = clique_blowup_is(g, 3, coords.to_disks())

    assert blown.n == 9
    assert len(max_independent_set_bb(blown)) == 2
    assert disks is not None
    assert intersection_graph_disks(disks) == blown
    with pytest.raises(InputError, match=">= 1"):
        clique_blowup_is(g, 0)


def test_regular_exact_c_instances() -> None:
    inst = regular_exact_c_tss(cycle_graph(5), 3)

    assert inst.thresholds == (2,) * 5
    assert inst.budget == 3
    with pytest.raises(ContractViolation, match="regular"):
        regular_exact_c_tss(path_graph(3), 1)


def test_registry_lists_every_reduction() -> None:
    assert set(REDUCTION_IDS) == {
        "sat2tss",
        "sat2majority",
        "planar2grid",
        "majority",
        "is2udg",
        "grid2exact2",
    }
    for reduction_id in REDUCTION_IDS:
        assert create_reduction(reduction_id).name == reduction_id
    with pytest.raises(ValueError, match="Unsupported reduction"):
        create_reduction("planar2udg")


def test_registry_adapters_apply_lift_and_project() -> None:
    g, emb = k4_embedding()
    reduction = create_reduction("is2udg")

    art = reduction.apply(ReductionInput(graph=g, embedding=emb))

    assert art.counters["r"] == 3
    lifted = reduction.lift(art, {2})
    assert reduction.project(art, lifted) == {2}

    with pytest.raises(InputError, match="needs a TSS instance"):
        create_reduction("majority").apply(ReductionInput(graph=g))
