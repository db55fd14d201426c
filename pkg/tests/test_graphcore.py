"""Graphs, exact geometry and the grid validator."""

from __future__ import annotations

import random
from fractions import Fraction

import pytest

from tss_geo.errors import InputError
from tss_geo.graphcore.geometry import (
    DiskRepresentation,
    GeoPoint,
    GridCoords,
    GridPoint,
    IntervalModel,
    format_rational,
    intersection_graph_disks,
    intersection_graph_grid_points,
    intersection_graph_intervals,
    parse_rational,
)
from tss_geo.graphcore.graph import (
    Graph,
    check_regular,
    complete_graph,
    cycle_graph,
    is_independent_set,
    is_vertex_cover,
    octahedron_graph,
    path_graph,
)
from tss_geo.graphcore.validators import validate_grid_graph
from tss_geo.harness.generators import random_grid_points


def test_graph_normalizes_edges_and_reports_degrees() -> None:
    g = Graph(4, [(1, 0), (2, 1), (3, 1)])

    assert g.sorted_edges == ((0, 1), (1, 2), (1, 3))
    assert g.degrees == (1, 3, 1, 1)
    assert g.max_degree == 3
    assert g.num_edges == 3
    assert g.neighbors(1) == frozenset({0, 2, 3})
    assert g.has_edge(3, 1)
    assert not g.has_edge(0, 2)


@pytest.mark.parametrize(
    ("edges", "match"),
    [
        ([(0, 0)], "self-loop"),
        ([(0, 1), (1, 0)], "duplicate edge"),
        ([(0, 3)], "out of range"),
        ([(0, 1, 2)], "two endpoints"),
    ],
)
def test_graph_rejects_malformed_edges(
    edges: list[tuple[int, ...]], match: str
) -> None:
    with pytest.raises(InputError, match=match):
        Graph(3, edges)


def test_graph_rejects_out_of_range_vertex_queries() -> None:
    with pytest.raises(InputError, match="out of range"):
        path_graph(3).neighbors(3)
    with pytest.raises(InputError, match="out of range"):
        path_graph(3).check_vertices([0, -1])


def test_subgraph_reindexes_in_ascending_order() -> None:
    sub, kept = cycle_graph(5).subgraph([4, 0, 2, 3])

    assert kept == [0, 2, 3, 4]
    # cycle edges among the kept vertices: 2-3, 3-4, 4-0
    assert sub.sorted_edges == ((0, 3), (1, 2), (2, 3))


def test_networkx_round_trip_preserves_graph() -> None:
    g = octahedron_graph()

    assert Graph.from_networkx(g.to_networkx()) == g
    assert check_regular(g, 4)
    assert g.num_edges == 12


def test_cover_and_independent_set_predicates_are_complementary() -> None:
    rng = random.Random(5)
    for _ in range(20):
        n = rng.randint(1, 8)
        g = Graph(
            n,
            [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < 0.4],
        )
        subset = {v for v in range(n) if rng.random() < 0.5}
        rest = set(range(n)) - subset
        assert is_vertex_cover(g, subset) == is_independent_set(g, rest)


@pytest.mark.parametrize(
    ("raw", "expected"),
    [
        ("3/6", Fraction(1, 2)),
        ("-2/4", Fraction(-1, 2)),
        (7, Fraction(7)),
        ("0.25", Fraction(1, 4)),
        (0.1, Fraction(1, 10)),
    ],
)
def test_parse_rational_accepts_text_integers_and_decimals(
    raw: object, expected: Fraction
) -> None:
    assert parse_rational(raw) == expected


@pytest.mark.parametrize("raw", ["1/0", "abc", True, None, float("nan")])
def test_parse_rational_rejects_garbage(raw: object) -> None:
    with pytest.raises(InputError):
        parse_rational(raw)


def test_format_rational_is_canonical() -> None:
    assert format_rational(Fraction(6, -4)) == "-3/2"
    assert format_rational(Fraction(3)) == "3/1"


def test_tangent_disks_intersect_and_slightly_apart_disks_do_not() -> None:
    rep = DiskRepresentation(
        Fraction(1),
        (
            GeoPoint(Fraction(0), Fraction(0)),
            GeoPoint(Fraction(1), Fraction(0)),
            GeoPoint(Fraction(2), Fraction(1, 1000)),
        ),
    )

    assert rep.intersects(0, 1)
    g = intersection_graph_disks(rep)
    # distance 1->2 is sqrt(1 + 1e-6) > 1
    assert g.sorted_edges == ((0, 1),)


def test_disk_intersection_graph_matches_pairwise_predicate() -> None:
    rng = random.Random(11)
    centers = tuple(
        GeoPoint(Fraction(rng.randint(0, 20), 4), Fraction(rng.randint(0, 20), 4))
        for _ in range(25)
    )
    rep = DiskRepresentation(Fraction(3, 2), centers)
    expected = Graph(
        len(centers),
        [
            (i, j)
            for i in range(len(centers))
            for j in range(i + 1, len(centers))
            if rep.intersects(i, j)
        ],
    )

    assert intersection_graph_disks(rep) == expected


@pytest.mark.parametrize("seed", range(12))
def test_disk_graph_ignores_shift_and_uniform_scale(seed: int) -> None:
    rng = random.Random(seed)
    centers = tuple(
        GeoPoint(Fraction(rng.randint(-12, 12), 3), Fraction(rng.randint(-12, 12), 5))
        for _ in range(rng.randint(1, 14))
    )
    diameter = Fraction(rng.randint(1, 9), rng.randint(1, 4))
    factor = Fraction(rng.randint(1, 50), rng.randint(1, 50))
    dx = Fraction(rng.randint(-100, 100), rng.randint(1, 13))
    dy = Fraction(rng.randint(-100, 100), rng.randint(1, 13))
    moved = tuple(p.scale(factor).translate(dx, dy) for p in centers)

    before = intersection_graph_disks(DiskRepresentation(diameter, centers))
    after = intersection_graph_disks(DiskRepresentation(diameter * factor, moved))

    assert after == before


def test_disk_representation_rejects_non_positive_diameter() -> None:
    with pytest.raises(InputError, match="diameter"):
        DiskRepresentation(Fraction(0), ())


def test_touching_intervals_intersect() -> None:
    model = IntervalModel.from_pairs([("0", "1"), ("1", "2"), ("5/2", "3")])

    assert intersection_graph_intervals(model).sorted_edges == ((0, 1),)


def test_interval_with_reversed_endpoints_is_rejected() -> None:
    with pytest.raises(InputError, match="lo > hi"):
        IntervalModel.from_pairs([("2", "1")])


def test_grid_graphs_are_unit_disk_graphs() -> None:
    rng = random.Random(3)
    for _ in range(10):
        points = random_grid_points(rng, 12)
        g = intersection_graph_grid_points(points)
        assert intersection_graph_disks(GridCoords(tuple(points)).to_disks()) == g


def test_validate_grid_graph_accepts_induced_grid_graph() -> None:
    points = (GridPoint(0, 0), GridPoint(1, 0), GridPoint(1, 1))
    g = intersection_graph_grid_points(points)

    report = validate_grid_graph(g, GridCoords(points))

    assert report.ok
    assert report.to_dict() == {"ok": True, "violations": []}


def test_validate_grid_graph_reports_first_violation() -> None:
    points = (GridPoint(0, 0), GridPoint(1, 0), GridPoint(1, 1))

    path = validate_grid_graph(path_graph(3), GridCoords(points))
    assert path.ok

    not_unit = validate_grid_graph(Graph(3, [(0, 2)]), GridCoords(points))
    assert not not_unit.ok
    assert not_unit.first() is not None
    assert not_unit.first().code == "edge_not_unit"

    induced = validate_grid_graph(Graph(3, [(0, 1)]), GridCoords(points))
    assert induced.first() is not None
    assert induced.first().code == "missing_edge"

    dup = validate_grid_graph(
        Graph(2), GridCoords((GridPoint(0, 0), GridPoint(0, 0)))
    )
    assert dup.first() is not None
    assert dup.first().code == "duplicate_point"


def test_complete_graph_is_regular() -> None:
    assert check_regular(complete_graph(5), 4)
    assert not check_regular(path_graph(3), 1)
