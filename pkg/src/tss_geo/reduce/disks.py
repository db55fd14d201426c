"""Planar r-regular Independent Set to r-regular unit disk graphs.

Every edge is replaced by a chain of 6 q_e small disks laid along its
polyline; every third chain position is widened into a clique of r - 1
coincident disks so the output stays r-regular. The independence number
grows by exactly sum(3 q_e).
"""

import logging
from collections.abc import Iterable
from fractions import Fraction

from tss_geo.embed.embedding import RectilinearEmbedding, validate_embedding
from tss_geo.errors import ContractViolation, InputError
from tss_geo.graphcore.geometry import (
    DiskRepresentation,
    GeoPoint,
    GridPoint,
    intersection_graph_disks,
)
from tss_geo.graphcore.graph import Edge, Graph, check_regular, is_independent_set
from tss_geo.reduce.artifact import (
    BudgetRecord,
    ReductionArtifact,
    Role,
    SubdivisionPlan,
)
from tss_geo.tsscore.instance import TSSInstance

logger = logging.getLogger(__name__)

CHAIN_DIAMETER = Fraction(1, 7)
CHAIN_LENGTHS = (6, 7, 8, 9)

# g mod 6 -> leading weights; the remaining weights are 6.
_LEADING_WEIGHTS: dict[int, tuple[int, ...]] = {
    0: (8,),
    1: (7,),
    2: (),
    3: (9, 8),
    4: (8, 8),
    5: (9,),
}


def choose_w(g: int) -> tuple[int, ...]:
    """Weights w_1..w_{g-1} in 6..9 with g - 2 + sum(w) divisible by 6.

    Raises:
        InputError: if ``g < 2``.
    """
    if g < 2:
        raise InputError(f"polyline length must be >= 2, got {g}")
    lead = _LEADING_WEIGHTS[g % 6]
    w = (*lead, *([6] * (g - 1 - len(lead))))
    if (g - 2 + sum(w)) % 6:
        raise AssertionError(f"weights {w} do not close the chain for g={g}")
    return w


def chain_centers(p: GridPoint, q: GridPoint, length: int) -> list[GeoPoint]:
    """``length`` centers on segment pq at a_j = (5j + l - 6) / (7(l - 1)).

    The first center lies 1/7 from p, the last 1/7 from q, consecutive gaps
    are at most 1/7 and gaps between every second center exceed 1/7.

    Raises:
        InputError: if p and q are not grid neighbours or ``length`` is not
            in 6..9.
    """
    if p.l1(q) != 1:
        raise InputError(f"({p.x}, {p.y}) and ({q.x}, {q.y}) are not adjacent")
    if length not in CHAIN_LENGTHS:
        raise InputError(f"chain length must be in 6..9, got {length}")
    dx, dy = q.x - p.x, q.y - p.y
    start = p.to_geo()
    centers = []
    for j in range(1, length + 1):
        a = Fraction(5 * j + length - 6, 7 * (length - 1))
        centers.append(start.translate(a * dx, a * dy))
    return centers


def _edge_chain(
    emb: RectilinearEmbedding, e: Edge
) -> tuple[SubdivisionPlan, list[GeoPoint]]:
    """Chain centers x_1..x_{6 q_e} of edge e, ordered from its lower endpoint."""
    line = emb.polyline(*e)
    g = len(line)
    plan = SubdivisionPlan.for_length(g, choose_w(g))
    centers: list[GeoPoint] = []
    for i in range(g - 1):
        if i > 0:
            centers.append(line[i].to_geo())
        centers.extend(chain_centers(line[i], line[i + 1], plan.w[i]))
    if len(centers) != plan.y_e:
        raise AssertionError(f"edge {e} chain has {len(centers)} != {plan.y_e} disks")
    return plan, centers


def is_planar_to_is_udg(
    g: Graph, r: int, emb: RectilinearEmbedding, k: int = 0
) -> ReductionArtifact:
    """Map (G, k) to (G', k + sum(3 q_e)) with G' an r-regular unit disk graph.

    Output vertices are the originals first, then per edge in ascending order
    each chain position followed by its clique copies. The disk model is
    checked against the combinatorial construction exactly.

    Raises:
        InputError: for r outside {3, 4} or an invalid embedding.
        ContractViolation: if ``g`` is not r-regular.
    """
    if r not in (3, 4):
        raise InputError(f"r must be 3 or 4, got {r}")
    if not check_regular(g, r):
        raise ContractViolation(f"graph is not {r}-regular", details={"r": r})
    report = validate_embedding(g, emb)
    if not report.ok:
        raise InputError("invalid rectilinear embedding", details=report.to_dict())

    centers: list[GeoPoint] = [p.to_geo() for p in emb.vpoint]
    roles: list[Role] = [Role.original(v) for v in g.vertices()]
    edges: list[Edge] = []
    plans: dict[Edge, SubdivisionPlan] = {}
    extra = 0

    for e in g.sorted_edges:
        plan, chain = _edge_chain(emb, e)
        plans[e] = plan
        prev_group = [e[0]]
        for pos, center in enumerate(chain, start=1):
            group = [len(centers)]
            centers.append(center)
            roles.append(Role.subdivision(e, pos))
            if pos % 3 == 2:
                for c in range(1, r - 1):
                    group.append(len(centers))
                    centers.append(center)
                    roles.append(Role.clique_copy(e, pos, c))
                edges.extend(
                    (a, b) for i, a in enumerate(group) for b in group[i + 1 :]
                )
            edges.extend((a, b) for a in prev_group for b in group)
            prev_group = group
        edges.extend((a, e[1]) for a in prev_group)
        extra += 3 * plan.q_e

    out = Graph(len(centers), edges)
    rep = DiskRepresentation(CHAIN_DIAMETER, tuple(centers))
    if intersection_graph_disks(rep) != out:
        raise AssertionError("disk model does not realize the chain construction")
    if not check_regular(out, r):
        raise AssertionError(f"chain construction is not {r}-regular")
    logger.info(
        "is2udg: n=%d r=%d -> %d vertices, k'=%d", g.n, r, out.n, k + extra
    )
    return ReductionArtifact(
        reduction="is2udg",
        graph=out,
        k=k + extra,
        provenance=tuple(roles),
        budget=BudgetRecord("k' = k + sum(3 q_e)", (("k", k), ("sum_3q", extra))),
        counters={"r": r, "sum_3q": extra, "chain_vertices": out.n - g.n},
        plans=plans,
        disks=rep,
        source=g,
    )


def _chains(art: ReductionArtifact) -> dict[Edge, dict[int, int]]:
    """Per edge: chain position -> index of the primary disk."""
    chains: dict[Edge, dict[int, int]] = {}
    for v, role in enumerate(art.provenance):
        if role.kind == "subdivision":
            chains.setdefault(role.edge, {})[role.ref[2]] = v
    return chains


def _source_graph(art: ReductionArtifact) -> Graph:
    if not isinstance(art.source, Graph):
        raise ContractViolation(f"{art.reduction} artifact has no source graph")
    return art.source


def is_lift_witness(art: ReductionArtifact, independent: Iterable[int]) -> set[int]:
    """Extend an independent set of G by 3 q_e chain vertices per edge.

    Odd chain positions are taken when the lower endpoint is outside the set,
    even positions otherwise.

    Raises:
        ContractViolation: if the input is not independent in G.
    """
    g = _source_graph(art)
    chosen = set(g.check_vertices(independent))
    if not is_independent_set(g, chosen):
        raise ContractViolation(
            "lift requires an independent set", details={"set": sorted(chosen)}
        )
    lifted = set(chosen)
    for e, chain in sorted(_chains(art).items()):
        parity = 0 if e[0] in chosen else 1
        lifted.update(v for pos, v in chain.items() if pos % 2 == parity)
    return lifted


def is_project_witness(art: ReductionArtifact, independent: Iterable[int]) -> set[int]:
    """Shrink an independent set of G' to one of G losing at most sum(3 q_e).

    Edges are processed in ascending order: chain vertices are always dropped
    and the lower endpoint goes too when both endpoints are still present.

    Raises:
        ContractViolation: if the input is not independent in G'.
    """
    g = _source_graph(art)
    chosen = art.graph.check_vertices(independent)
    if not is_independent_set(art.graph, chosen):
        raise ContractViolation(
            "projection requires an independent set", details={"set": sorted(chosen)}
        )
    current = {v for v in chosen if v < g.n}
    for u, v in g.sorted_edges:
        if u in current and v in current:
            current.discard(u)
    return current


def clique_blowup_is(
    g: Graph, q: int, disks: DiskRepresentation | None = None
) -> tuple[Graph, DiskRepresentation | None]:
    """Replace every vertex by a q-clique joined completely to its neighbours.

    Copy ``c`` of vertex ``v`` gets index ``v * q + c``; with ``disks`` the
    copies share their original's center.

    Raises:
        InputError: if ``q < 1`` or ``disks`` does not cover the graph.
    """
    if q < 1:
        raise InputError(f"clique size must be >= 1, got {q}")
    edges: list[Edge] = []
    for v in g.vertices():
        block = range(v * q, (v + 1) * q)
        edges.extend((a, b) for a in block for b in block if a < b)
    for u, v in g.sorted_edges:
        edges.extend(
            (u * q + a, v * q + b) for a in range(q) for b in range(q)
        )
    blown = Graph(g.n * q, edges)
    if disks is None:
        return blown, None
    if len(disks.centers) != g.n:
        raise InputError(f"{len(disks.centers)} disks for {g.n} vertices")
    centers = tuple(c for c in disks.centers for _ in range(q))
    return blown, DiskRepresentation(disks.diameter, centers)


def regular_exact_c_tss(g: Graph, k: int, c: int | None = None) -> TSSInstance:
    """Threshold c = deg on a c-regular graph: exact(c) and unanimous at once.

    Raises:
        ContractViolation: if ``g`` is not regular (or not ``c``-regular).
    """
    degree = g.max_degree if c is None else c
    if not check_regular(g, degree):
        raise ContractViolation(
            f"graph is not {degree}-regular", details={"c": degree}
        )
    return TSSInstance.build(g, [degree] * g.n, k)
