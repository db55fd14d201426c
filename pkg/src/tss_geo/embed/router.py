"""Rectilinear embedder: planar straight-line placement plus grid routing.

Vertices come from a networkx straight-line planar drawing, scaled by a
spacing factor. Every vertex owns its four neighbouring grid cells as ports;
incident edges get ports in the angular order of the drawing, so the rotation
system is preserved. Edges are then routed one by one with a Dijkstra search
over free cells that charges for bends. A failed attempt restarts with more
spacing and a reshuffled routing order. Only a validator-accepted result is
ever returned.
"""

import heapq
import itertools
import logging
import math
import random
from collections.abc import Sequence

import networkx as nx

from tss_geo.embed.embedding import (
    Polyline,
    RectilinearEmbedding,
    embedding_area,
    validate_embedding,
)
from tss_geo.errors import EmbeddingError
from tss_geo.graphcore.geometry import UNIT_STEPS, GridPoint
from tss_geo.graphcore.graph import Edge, Graph

logger = logging.getLogger(__name__)

# Counter-clockwise: east, north, west, south.
PORT_DIRECTIONS: tuple[tuple[int, int], ...] = ((1, 0), (0, 1), (-1, 0), (0, -1))
PORT_ANGLES = (0.0, math.pi / 2, math.pi, 3 * math.pi / 2)

BEND_PENALTY = 2
AREA_CONSTANT = 64


class _RoutingFailed(Exception):
    def __init__(self, edge: Edge) -> None:
        super().__init__(f"could not route edge {edge}")
        self.edge = edge


def _planar_positions(g: Graph) -> list[tuple[int, int]]:
    is_planar, embedding = nx.check_planarity(g.to_networkx())
    if not is_planar:
        raise EmbeddingError(
            "no embedding found: the graph admits no planar drawing",
            details={"n": g.n, "m": g.num_edges},
        )
    pos = nx.combinatorial_embedding_to_pos(embedding)
    return [(int(pos[v][0]), int(pos[v][1])) for v in range(g.n)]


def _angle_gap(a: float, b: float) -> float:
    gap = abs(a - b) % (2 * math.pi)
    return min(gap, 2 * math.pi - gap)


def assign_ports(
    g: Graph, pos: Sequence[tuple[int, int]]
) -> dict[tuple[int, int], int]:
    """Map each (vertex, neighbour) to a port direction index.

    Neighbours keep their counter-clockwise order around the vertex; among
    order-preserving assignments the one closest to the drawn angles wins.
    """
    ports: dict[tuple[int, int], int] = {}
    for v in g.vertices():
        nbrs = list(g.neighbors(v))
        if not nbrs:
            continue
        angles = {
            w: math.atan2(pos[w][1] - pos[v][1], pos[w][0] - pos[v][0])
            % (2 * math.pi)
            for w in nbrs
        }
        ccw = sorted(nbrs, key=lambda w: (angles[w], w))
        d = len(ccw)
        best: tuple[float, tuple[int, ...], int] | None = None
        for combo in itertools.combinations(range(4), d):
            for shift in range(d):
                cost = sum(
                    _angle_gap(angles[ccw[(i + shift) % d]], PORT_ANGLES[combo[i]])
                    for i in range(d)
                )
                key = (round(cost, 9), combo, shift)
                if best is None or key < best:
                    best = key
        assert best is not None
        _, combo, shift = best
        for i in range(d):
            ports[(v, ccw[(i + shift) % d])] = combo[i]
    return ports


class _Router:
    def __init__(
        self,
        vpoints: Sequence[GridPoint],
        ports: dict[tuple[int, int], int],
        margin: int,
    ) -> None:
        self.vpoints = vpoints
        self.ports = ports
        self.blocked: set[GridPoint] = set(vpoints)
        for p in vpoints:
            self.blocked.update(p.step(dx, dy) for dx, dy in UNIT_STEPS)
        xs = [p.x for p in vpoints] or [0]
        ys = [p.y for p in vpoints] or [0]
        self.bounds = (
            min(xs) - margin,
            max(xs) + margin,
            min(ys) - margin,
            max(ys) + margin,
        )

    def port_cell(self, v: int, w: int) -> tuple[GridPoint, int]:
        direction = self.ports[(v, w)]
        dx, dy = PORT_DIRECTIONS[direction]
        return self.vpoints[v].step(dx, dy), direction

    def _inside(self, p: GridPoint) -> bool:
        x0, x1, y0, y1 = self.bounds
        return x0 <= p.x <= x1 and y0 <= p.y <= y1

    def route(self, u: int, w: int) -> Polyline:
        start, start_dir = self.port_cell(u, w)
        goal, _ = self.port_cell(w, u)
        counter = itertools.count()
        frontier: list[tuple[int, int, GridPoint, int]] = [
            (0, next(counter), start, start_dir)
        ]
        best: dict[tuple[GridPoint, int], int] = {(start, start_dir): 0}
        parent: dict[tuple[GridPoint, int], tuple[GridPoint, int] | None] = {
            (start, start_dir): None
        }
        reached: tuple[GridPoint, int] | None = None
        while frontier:
            cost, _, point, heading = heapq.heappop(frontier)
            if best.get((point, heading), math.inf) < cost:
                continue
            if point == goal:
                reached = (point, heading)
                break
            for direction, (dx, dy) in enumerate(PORT_DIRECTIONS):
                nxt = point.step(dx, dy)
                if nxt != goal and (nxt in self.blocked or not self._inside(nxt)):
                    continue
                step_cost = cost + 1 + (BEND_PENALTY if direction != heading else 0)
                state = (nxt, direction)
                if step_cost < best.get(state, math.inf):
                    best[state] = step_cost
                    parent[state] = (point, heading)
                    heapq.heappush(frontier, (step_cost, next(counter), nxt, direction))
        if reached is None:
            raise _RoutingFailed((min(u, w), max(u, w)))

        path: list[GridPoint] = []
        node: tuple[GridPoint, int] | None = reached
        while node is not None:
            path.append(node[0])
            node = parent[node]
        path.reverse()
        self.blocked.update(path)
        return (self.vpoints[u], *path, self.vpoints[w])


def _attempt(
    base: Sequence[tuple[int, int]],
    ports: dict[tuple[int, int], int],
    scale: int,
    order: Sequence[Edge],
) -> RectilinearEmbedding:
    vpoints = [GridPoint(x * scale, y * scale) for x, y in base]
    router = _Router(vpoints, ports, margin=2 * scale + 2)
    epath: dict[Edge, Polyline] = {}
    for u, w in order:
        epath[(u, w)] = router.route(u, w)
    return RectilinearEmbedding(tuple(vpoints), epath)


def compute_embedding(
    g: Graph, *, seed: int = 0, attempts: int = 24
) -> RectilinearEmbedding:
    """A rectilinear embedding of a planar graph with maximum degree <= 4.

    Raises:
        EmbeddingError: for degree > 4, a non-planar graph, or when every
            attempt fails to route; ``details`` lists the failed attempts.
    """
    if g.max_degree > 4:
        raise EmbeddingError(
            f"maximum degree {g.max_degree} exceeds the four grid directions",
            details={"max_degree": g.max_degree},
        )
    base = _planar_positions(g)
    ports = assign_ports(g, base)
    rng = random.Random(seed)
    failures: list[dict[str, object]] = []

    for attempt in range(attempts):
        scale = 3 + 2 * (attempt // 4)
        order = sorted(
            g.sorted_edges,
            key=lambda e: abs(base[e[0]][0] - base[e[1]][0])
            + abs(base[e[0]][1] - base[e[1]][1]),
        )
        if attempt % 4:
            rng.shuffle(order)
        try:
            emb = _attempt(base, ports, scale, order)
        except _RoutingFailed as exc:
            logger.debug("embed attempt %d (scale %d): %s", attempt, scale, exc)
            failures.append(
                {"attempt": attempt, "scale": scale, "edge": list(exc.edge)}
            )
            continue
        report = validate_embedding(g, emb)
        if not report.ok:
            failures.append({"attempt": attempt, "scale": scale, **report.to_dict()})
            continue
        area = embedding_area(emb)
        if area > AREA_CONSTANT * max(g.n, 1) ** 2:
            logger.warning(
                "embedding area %d exceeds %d*n^2 for n=%d", area, AREA_CONSTANT, g.n
            )
        logger.info(
            "embedded n=%d m=%d in attempt %d (scale %d, area %d)",
            g.n,
            g.num_edges,
            attempt,
            scale,
            area,
        )
        return emb

    raise EmbeddingError(
        f"no embedding found after {attempts} attempts",
        details={"attempts": attempts, "failures": failures[-5:]},
    )
