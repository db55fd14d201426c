"""Seeded instance generators for campaigns, tests and ``gen``.

Every generator takes a ``random.Random`` so a case is fully determined by
its seed.
"""

import random
from fractions import Fraction

from tss_geo.embed.embedding import RectilinearEmbedding
from tss_geo.graphcore.geometry import (
    UNIT_STEPS,
    GridCoords,
    GridPoint,
    IntervalModel,
    intersection_graph_grid_points,
)
from tss_geo.graphcore.graph import Edge, Graph, complete_graph, octahedron_graph
from tss_geo.reduce.cnf import CnfFormula, validate_restricted_3sat
from tss_geo.tsscore.instance import TSSInstance
from tss_geo.tsscore.thresholds import majority_threshold

_SAT_ATTEMPTS = 1000


def random_graph_er(rng: random.Random, n: int, p: float) -> Graph:
    """Erdos-Renyi G(n, p)."""
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
    return Graph(n, edges)


def random_thresholds(
    rng: random.Random, g: Graph, *, low: int = 0, slack: int = 0
) -> tuple[int, ...]:
    """Uniform thresholds in [low, deg(v) + slack]."""
    return tuple(rng.randint(min(low, d + slack), d + slack) for d in g.degrees)


def near_majority_thresholds(rng: random.Random, g: Graph) -> tuple[int, ...]:
    """Thresholds within one of ceil(deg / 2), never above the degree.

    Keeps the number of cherries and leaves of the majority transform small.
    """
    result = []
    for d in g.degrees:
        m = majority_threshold(d)
        result.append(rng.randint(max(0, m - 1), min(d, m + 1)))
    return tuple(result)


def majority_thresholds(g: Graph) -> tuple[int, ...]:
    return tuple(majority_threshold(d) for d in g.degrees)


def random_instance(
    rng: random.Random,
    n: int,
    p: float = 0.3,
    *,
    slack: int = 0,
    budget: int = 0,
) -> TSSInstance:
    g = random_graph_er(rng, n, p)
    return TSSInstance.build(g, random_thresholds(rng, g, slack=slack), budget)


def random_grid_points(rng: random.Random, n: int) -> list[GridPoint]:
    """A connected set of ``n`` grid points grown from the origin."""
    points = [GridPoint(0, 0)]
    taken = {points[0]}
    while len(points) < n:
        base = rng.choice(points)
        dx, dy = rng.choice(UNIT_STEPS)
        nxt = base.step(dx, dy)
        if nxt not in taken:
            taken.add(nxt)
            points.append(nxt)
    return points


def random_grid_graph(rng: random.Random, n: int) -> tuple[Graph, GridCoords]:
    """A connected induced grid subgraph; no isolated vertices for n >= 2."""
    points = random_grid_points(rng, n)
    return intersection_graph_grid_points(points), GridCoords(tuple(points))


def random_interval_model(
    rng: random.Random, n: int, *, span: int = 8, denominator: int = 4
) -> IntervalModel:
    """Closed intervals with endpoints on the lattice (1/denominator) Z."""
    intervals = []
    for _ in range(n):
        lo = Fraction(rng.randint(0, span * denominator), denominator)
        length = Fraction(rng.randint(0, 3 * denominator), denominator)
        intervals.append((lo, lo + length))
    return IntervalModel(tuple(intervals))


def random_restricted_3sat(rng: random.Random, n: int) -> CnfFormula:
    """Distribute the slots +x, +x, -x of every variable over short clauses.

    Clause sizes are drawn from 1..3 (mostly 2 and 3). A draw that puts a
    literal twice into one clause is retried.
    """
    slots = [lit for v in range(1, n + 1) for lit in (v, v, -v)]
    for _ in range(_SAT_ATTEMPTS):
        rng.shuffle(slots)
        clauses: list[list[int]] = []
        pos = 0
        while pos < len(slots):
            size = rng.choice((1, 2, 2, 3, 3, 3))
            clauses.append(slots[pos : pos + size])
            pos += size
        if all(len(set(c)) == len(c) for c in clauses):
            f = CnfFormula.of(n, clauses)
            if validate_restricted_3sat(f).ok:
                return f
    raise AssertionError(f"no restricted formula drawn for n={n}")


def random_planar_graph(rng: random.Random, n: int) -> Graph:
    """A connected planar graph with maximum degree 4.

    Grid growth gives the skeleton; each unit cell with all four corners
    present may receive one of its diagonals when both ends have spare degree.
    """
    points = random_grid_points(rng, n)
    index = {p: i for i, p in enumerate(points)}
    base = intersection_graph_grid_points(points)
    degree = list(base.degrees)
    edges: list[Edge] = list(base.sorted_edges)
    for p in points:
        corners = [p, p.step(1, 0), p.step(0, 1), p.step(1, 1)]
        if not all(c in index for c in corners) or rng.random() < 0.5:
            continue
        a, b = (corners[0], corners[3]) if rng.random() < 0.5 else corners[1:3]
        u, v = index[a], index[b]
        if degree[u] < 4 and degree[v] < 4:
            edges.append((u, v))
            degree[u] += 1
            degree[v] += 1
    return Graph(n, edges)


def _embedding(
    vpoint: list[tuple[int, int]], lines: dict[Edge, list[tuple[int, int]]]
) -> RectilinearEmbedding:
    return RectilinearEmbedding(
        tuple(GridPoint(x, y) for x, y in vpoint),
        {e: tuple(GridPoint(x, y) for x, y in pts) for e, pts in lines.items()},
    )


def k4_embedding() -> tuple[Graph, RectilinearEmbedding]:
    """K_4 with vertex 3 inside the triangle 0, 1, 2."""
    vpoint = [(0, 0), (2, 0), (1, 2), (1, 1)]
    lines = {
        (2, 3): [(1, 1), (1, 2)],
        (0, 3): [(1, 1), (0, 1), (0, 0)],
        (1, 3): [(1, 1), (2, 1), (2, 0)],
        (0, 1): [(0, 0), (1, 0), (2, 0)],
        (0, 2): [
            (0, 0), (-1, 0), (-1, 1), (-1, 2), (-1, 3), (0, 3), (1, 3), (1, 2)
        ],
        (1, 2): [(2, 0), (3, 0), (3, 1), (3, 2), (2, 2), (1, 2)],
    }
    return complete_graph(4), _embedding(vpoint, lines)


def _straight(a: tuple[int, int], *turns: tuple[int, int]) -> list[tuple[int, int]]:
    """Unit-step polyline from ``a`` through axis-parallel corners."""
    line = [a]
    for tx, ty in turns:
        x, y = line[-1]
        while (x, y) != (tx, ty):
            x += (tx > x) - (tx < x)
            y += (ty > y) - (ty < y)
            line.append((x, y))
    return line


def octahedron_embedding() -> tuple[Graph, RectilinearEmbedding]:
    """The octahedron with antipodes 0-1, 2-3, 4-5.

    Vertex 4 sits inside the square 0, 2, 1, 3; vertex 5 lies outside and
    reaches its four neighbours around the square.
    """
    vpoint = [(0, 2), (4, 2), (2, 4), (2, 0), (2, 2), (-2, -2)]
    lines = {
        (0, 4): _straight((0, 2), (2, 2)),
        (2, 4): _straight((2, 4), (2, 2)),
        (1, 4): _straight((4, 2), (2, 2)),
        (3, 4): _straight((2, 0), (2, 2)),
        (0, 2): _straight((0, 2), (0, 4), (2, 4)),
        (1, 2): _straight((2, 4), (4, 4), (4, 2)),
        (1, 3): _straight((4, 2), (4, 0), (2, 0)),
        (0, 3): _straight((2, 0), (0, 0), (0, 2)),
        (3, 5): _straight((-2, -2), (2, -2), (2, 0)),
        (0, 5): _straight((-2, -2), (-2, 2), (0, 2)),
        (2, 5): _straight((-2, -2), (-3, -2), (-3, 6), (2, 6), (2, 4)),
        (1, 5): _straight((-2, -2), (-2, -3), (6, -3), (6, 2), (4, 2)),
    }
    return octahedron_graph(), _embedding(vpoint, lines)


# (formula, satisfiable)
HANDCRAFTED_FORMULAS: tuple[tuple[CnfFormula, bool], ...] = (
    (CnfFormula.of(1, [[1], [1], [-1]]), False),
    (CnfFormula.of(1, [[1, -1], [1]]), True),
    (CnfFormula.of(2, [[1, 2], [1, -2], [-1, 2]]), True),
    (CnfFormula.of(2, [[1], [2], [-1, -2], [1, 2]]), False),
    (CnfFormula.of(3, [[1, 2, 3], [1, -2], [2, -3], [-1, 3]]), True),
    (CnfFormula.of(3, [[1], [2], [3], [-1, -2, -3], [1, 2, 3]]), False),
)
