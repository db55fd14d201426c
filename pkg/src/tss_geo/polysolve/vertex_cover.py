"""The unanimous TSS <-> Vertex Cover equivalence and small exact VC/IS oracles."""

from dataclasses import dataclass
from itertools import combinations
from typing import Any

from tss_geo.errors import ContractViolation
from tss_geo.graphcore.graph import Graph, is_vertex_cover
from tss_geo.tsscore.instance import TSSInstance
from tss_geo.tsscore.thresholds import is_unanimous


@dataclass(frozen=True, slots=True)
class VCInstance:
    graph: Graph
    k: int = 0

    def to_dict(self) -> dict[str, Any]:
        return {"graph": self.graph.to_dict(), "k": self.k}


def unanimous_tss_to_vc(inst: TSSInstance) -> VCInstance:
    """(G, deg, k) -> (G, k): a set is a VC iff it is a target set.

    Raises:
        ContractViolation: if some threshold differs from the degree.
    """
    if not is_unanimous(inst):
        raise ContractViolation("instance thresholds are not unanimous")
    return VCInstance(inst.graph, inst.budget)


def vc_to_unanimous_tss(inst: VCInstance) -> TSSInstance:
    return TSSInstance.unanimous(inst.graph, inst.k)


def min_vertex_cover_bruteforce(g: Graph) -> frozenset[int]:
    """Lexicographically first minimum vertex cover, by enumeration."""
    for size in range(g.n + 1):
        for subset in combinations(range(g.n), size):
            if is_vertex_cover(g, subset):
                return frozenset(subset)
    raise AssertionError("V is always a vertex cover")


def max_independent_set_enumerate(g: Graph) -> frozenset[int]:
    """Maximum independent set by enumerating subsets with bitsets (n <= ~20)."""
    masks = g.adjacency_masks
    best = 0
    best_size = 0
    for subset in range(1 << g.n):
        size = subset.bit_count()
        if size <= best_size:
            continue
        rest = subset
        independent = True
        while rest:
            low = rest & -rest
            v = low.bit_length() - 1
            if masks[v] & subset:
                independent = False
                break
            rest ^= low
        if independent:
            best, best_size = subset, size
    return frozenset(v for v in range(g.n) if best >> v & 1)
