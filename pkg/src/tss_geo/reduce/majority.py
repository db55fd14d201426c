"""General thresholds to majority thresholds via leaves and cherries."""

import logging
from collections.abc import Iterable
from dataclasses import dataclass

from tss_geo.errors import ContractViolation
from tss_geo.graphcore.graph import Edge, Graph
from tss_geo.reduce.artifact import BudgetRecord, ReductionArtifact, Role
from tss_geo.tsscore.activation import is_target_set
from tss_geo.tsscore.instance import TSSInstance
from tss_geo.tsscore.preprocess import normalize_seed
from tss_geo.tsscore.thresholds import majority_threshold

logger = logging.getLogger(__name__)


@dataclass(slots=True)
class Augmenter:
    """Appends leaves and cherries to a base graph.

    A cherry is the path g^l - g^m - g^r with thresholds 1, 2, 1 whose middle
    vertex is joined to the host. New vertices are numbered after the base.
    """

    n: int
    edges: list[Edge]
    thresholds: list[int]
    roles: list[Role]
    cherries: int = 0
    leaves: int = 0

    @classmethod
    def over(
        cls, graph: Graph, thresholds: Iterable[int], roles: Iterable[Role]
    ) -> "Augmenter":
        return cls(graph.n, list(graph.sorted_edges), list(thresholds), list(roles))

    def _new(self, threshold: int, role: Role) -> int:
        v = self.n
        self.n += 1
        self.thresholds.append(threshold)
        self.roles.append(role)
        return v

    def leaf(self, parent: int) -> int:
        v = self._new(1, Role.leaf(parent, self.leaves))
        self.leaves += 1
        self.edges.append((parent, v))
        return v

    def cherry(self, host: int) -> int:
        index = self.cherries
        self.cherries += 1
        left = self._new(1, Role.cherry(index, host, "l"))
        middle = self._new(2, Role.cherry(index, host, "m"))
        right = self._new(1, Role.cherry(index, host, "r"))
        self.edges.extend([(host, middle), (left, middle), (middle, right)])
        return middle

    def graph(self) -> Graph:
        return Graph(self.n, self.edges)


def majority_transform(inst: TSSInstance) -> ReductionArtifact:
    """Rewrite every threshold to ceil(deg / 2) without changing the optimum.

    A vertex with t(v) above its majority gets 2t(v) - deg(v) leaves of
    threshold 1. A vertex below it gets deg(v) - 2t(v) cherries and its
    threshold becomes deg(v) - t(v). Each cherry costs one extra seed, so
    k' = k + alpha where alpha counts cherries.
    """
    g = inst.graph
    aug = Augmenter.over(g, inst.thresholds, (Role.original(v) for v in g.vertices()))
    raised = 0
    for v in g.vertices():
        d, t = g.degree(v), inst.thresholds[v]
        target = majority_threshold(d)
        if t > target:
            for _ in range(2 * t - d):
                aug.leaf(v)
        elif t < target:
            for _ in range(d - 2 * t):
                aug.cherry(v)
            aug.thresholds[v] = d - t
            raised += 1

    alpha = aug.cherries
    out = TSSInstance.build(aug.graph(), aug.thresholds, inst.budget + alpha)
    logger.info(
        "majority_transform: n=%d -> %d, alpha=%d, leaves=%d",
        g.n,
        out.n,
        alpha,
        aug.leaves,
    )
    return ReductionArtifact(
        reduction="majority",
        graph=out.graph,
        k=out.budget,
        provenance=tuple(aug.roles),
        budget=BudgetRecord("k' = k + alpha", (("k", inst.budget), ("alpha", alpha))),
        instance=out,
        counters={"alpha": alpha, "leaves": aug.leaves, "raised": raised},
        source=inst,
    )


def cherry_middles(art: ReductionArtifact) -> list[int]:
    return [
        v
        for v, role in enumerate(art.provenance)
        if role.kind == "cherry" and role.name == "m"
    ]


def majority_lift_witness(art: ReductionArtifact, seed: Iterable[int]) -> set[int]:
    """S' = S plus the middle vertex of every cherry."""
    return set(seed) | set(cherry_middles(art))


def majority_project_witness(art: ReductionArtifact, seed: Iterable[int]) -> set[int]:
    """Target set of the source from one of the transformed instance.

    Seeds on added vertices are first normalized: leaves hand their seed to
    their parent, cherry ends to their middle. A leaf that keeps its seed
    counts as its parent and cherry seeds are dropped. A cherry can only fire
    its middle vertex when one of its own vertices is seeded, so the result
    has size at most |S'| - alpha.

    Raises:
        ContractViolation: if ``seed`` is not a target set of the output.
    """
    out = art.require_instance()
    chosen = out.graph.check_vertices(seed)
    if not is_target_set(out, chosen):
        raise ContractViolation(
            "majority projection requires a target set of the output",
            details={"seed": sorted(chosen)},
        )
    added = [v for v, role in enumerate(art.provenance) if role.kind != "original"]
    projected: set[int] = set()
    for v in normalize_seed(out, chosen, movable=added):
        role = art.provenance[v]
        if role.kind in ("original", "leaf"):
            projected.add(role.ref[0])
    return projected
