"""Edge subdivision and the planar-to-grid TSS reduction."""

import logging
from collections.abc import Iterable
from dataclasses import dataclass

from tss_geo.embed.embedding import RectilinearEmbedding, validate_embedding
from tss_geo.errors import ContractViolation, InputError
from tss_geo.graphcore.geometry import GridCoords, GridPoint
from tss_geo.graphcore.graph import Edge, Graph, normalize_edge
from tss_geo.graphcore.validators import validate_grid_graph
from tss_geo.reduce.artifact import BudgetRecord, ReductionArtifact, Role
from tss_geo.tsscore.activation import is_target_set
from tss_geo.tsscore.instance import TSSInstance
from tss_geo.tsscore.preprocess import normalize_seed

logger = logging.getLogger(__name__)


def _pull_back(
    chosen: Iterable[int],
    n: int,
    endpoints: dict[int, Edge],
) -> set[int]:
    """Replace chain seeds by an unseeded endpoint of their edge.

    Seeds are handled in ascending order. A chain seed whose endpoints are
    both seeded is dropped and the set is padded with the lowest unseeded
    original vertices, so the size never shrinks below min(|S|, n).
    """
    ordered = sorted(chosen)
    result = {v for v in ordered if v < n}
    for v in ordered:
        if v < n:
            continue
        free = next((u for u in endpoints[v] if u not in result), None)
        if free is not None:
            result.add(free)
    spare = (v for v in range(n) if v not in result)
    while len(result) < min(len(ordered), n):
        result.add(next(spare))
    return result


@dataclass(frozen=True, slots=True)
class SubdivisionStep:
    """Witness maps for one subdivided edge; the new vertex is ``new``."""

    edge: Edge
    new: int

    def lift(self, seed: Iterable[int]) -> set[int]:
        return set(seed)

    def project(self, out: TSSInstance, seed: Iterable[int]) -> set[int]:
        """Move a seed on the new vertex to an endpoint; size is preserved.

        Raises:
            ContractViolation: if ``seed`` is not a target set of ``out``.
        """
        chosen = out.graph.check_vertices(seed)
        if not is_target_set(out, chosen):
            raise ContractViolation(
                "projection requires a target set", details={"seed": sorted(chosen)}
            )
        return _pull_back(chosen, self.new, {self.new: self.edge})


def subdivide_edge_once(
    inst: TSSInstance, e: Edge
) -> tuple[TSSInstance, SubdivisionStep]:
    """Replace edge {u, v} by the path u - v' - v with t(v') = 1.

    Raises:
        InputError: if ``e`` is not an edge of the instance.
    """
    g = inst.graph
    u, v = normalize_edge(*e)
    if not g.has_edge(u, v):
        raise InputError(f"edge {(u, v)} is not in the graph", details={"edge": [u, v]})
    new = g.n
    edges = [x for x in g.sorted_edges if x != (u, v)]
    edges.extend([(u, new), (v, new)])
    out = TSSInstance.build(Graph(g.n + 1, edges), (*inst.thresholds, 1), inst.budget)
    return out, SubdivisionStep((u, v), new)


def planar_tss_to_grid_tss(
    inst: TSSInstance, emb: RectilinearEmbedding
) -> ReductionArtifact:
    """Lay the instance out on the grid along its rectilinear embedding.

    Every interior polyline point becomes a threshold-1 vertex, then every
    unit segment is subdivided once more at its midpoint. All coordinates are
    doubled so midpoints stay integral. Original vertices keep their indices
    and the budget is unchanged.

    Raises:
        InputError: if ``emb`` is not a valid embedding of the graph.
    """
    g = inst.graph
    report = validate_embedding(g, emb)
    if not report.ok:
        raise InputError("invalid rectilinear embedding", details=report.to_dict())

    coords: list[GridPoint] = [p.scaled(2) for p in emb.vpoint]
    roles = [Role.original(v) for v in g.vertices()]
    edges: list[Edge] = []
    endpoints: dict[int, Edge] = {}
    phase1 = phase2 = 0

    def add(point: GridPoint, role: Role, e: Edge) -> int:
        coords.append(point)
        roles.append(role)
        endpoints[len(coords) - 1] = e
        return len(coords) - 1

    for e in g.sorted_edges:
        line = emb.polyline(*e)
        prev = e[0]
        for i in range(1, len(line)):
            a, b = line[i - 1], line[i]
            mid = add(GridPoint(a.x + b.x, a.y + b.y), Role.subdivision(e, i), e)
            phase2 += 1
            edges.append((prev, mid))
            if i == len(line) - 1:
                edges.append((mid, e[1]))
            else:
                point = add(b.scaled(2), Role.embed_point(e, i + 1), e)
                phase1 += 1
                edges.append((mid, point))
                prev = point

    out_graph = Graph(len(coords), edges)
    out = TSSInstance.build(
        out_graph,
        (*inst.thresholds, *([1] * (out_graph.n - g.n))),
        inst.budget,
    )
    grid = GridCoords(tuple(coords))
    check = validate_grid_graph(out_graph, grid)
    if not check.ok:
        raise AssertionError(f"grid reduction broke the grid: {check.first()}")
    logger.info(
        "planar2grid: n=%d -> %d (phase1=%d, phase2=%d)",
        g.n,
        out_graph.n,
        phase1,
        phase2,
    )
    return ReductionArtifact(
        reduction="planar2grid",
        graph=out_graph,
        k=inst.budget,
        provenance=tuple(roles),
        budget=BudgetRecord("k' = k", (("k", inst.budget),)),
        instance=out,
        counters={"phase1": phase1, "phase2": phase2},
        coords=grid,
        source=inst,
    )


def grid_lift_witness(art: ReductionArtifact, seed: Iterable[int]) -> set[int]:
    """Original vertices keep their indices, so S is already a target set."""
    return set(seed)


def grid_project_witness(art: ReductionArtifact, seed: Iterable[int]) -> set[int]:
    """Pull chain seeds back onto edge endpoints.

    Chain seeds are normalized first, so each walks along its chain onto an
    unseeded endpoint; chain seeds left stuck are pulled back directly.

    Raises:
        ContractViolation: if ``seed`` is not a target set of the output.
    """
    out = art.require_instance()
    chosen = out.graph.check_vertices(seed)
    if not is_target_set(out, chosen):
        raise ContractViolation(
            "projection requires a target set", details={"seed": sorted(chosen)}
        )
    n = len(art.vertices_of_kind("original"))
    endpoints = {
        v: role.edge
        for v, role in enumerate(art.provenance)
        if role.kind in ("subdivision", "embed_point")
    }
    normalized = normalize_seed(out, chosen, movable=endpoints)
    return _pull_back(normalized, n, endpoints)
