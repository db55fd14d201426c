"""Exact maximum independent set by branch and bound over vertex bitsets."""

import logging
from collections.abc import Iterator

from tss_geo.graphcore.graph import Graph, is_independent_set

logger = logging.getLogger(__name__)


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class _BranchAndBound:
    """Branch on a maximum-degree vertex after exhaustive reductions.

    Reductions: degree-0 and degree-1 vertices are taken; a vertex v whose
    closed neighbourhood contains the closed neighbourhood of an adjacent u is
    dropped (some maximum set avoids v). Each connected component is solved on
    its own. The exclusion branch is explored only if a greedy clique cover
    still leaves room to beat the inclusion branch.
    """

    def __init__(self, g: Graph) -> None:
        self.adj = g.adjacency_masks
        self.closed = tuple(m | 1 << v for v, m in enumerate(self.adj))
        self.branches = 0

    def _reduce(self, cand: int) -> tuple[int, int]:
        taken = 0
        changed = True
        while changed:
            changed = False
            for v in _bits(cand):
                if not cand >> v & 1:
                    continue
                nbrs = self.adj[v] & cand
                degree = nbrs.bit_count()
                if degree <= 1:
                    taken |= 1 << v
                    cand &= ~(self.closed[v])
                    changed = True
                    continue
                own = self.closed[v] & cand
                for u in _bits(nbrs):
                    # N[u] ⊆ N[v] for adjacent u: drop v
                    if (self.closed[u] & cand) & ~own == 0:
                        cand &= ~(1 << v)
                        changed = True
                        break
        return taken, cand

    def _components(self, cand: int) -> list[int]:
        parts = []
        rest = cand
        while rest:
            seed = rest & -rest
            comp = seed
            frontier = seed
            while frontier:
                grown = 0
                for v in _bits(frontier):
                    grown |= self.adj[v]
                grown &= rest & ~comp
                comp |= grown
                frontier = grown
            parts.append(comp)
            rest &= ~comp
        return parts

    def _clique_cover_bound(self, cand: int) -> int:
        cliques: list[int] = []
        for v in _bits(cand):
            for i, clique in enumerate(cliques):
                if clique & ~self.adj[v] == 0:
                    cliques[i] = clique | 1 << v
                    break
            else:
                cliques.append(1 << v)
        return len(cliques)

    def solve(self, cand: int) -> int:
        taken, cand = self._reduce(cand)
        if not cand:
            return taken
        parts = self._components(cand)
        if len(parts) > 1:
            for part in parts:
                taken |= self.solve(part)
            return taken

        self.branches += 1
        pivot = max(_bits(cand), key=lambda v: ((self.adj[v] & cand).bit_count(), -v))
        with_pivot = 1 << pivot | self.solve(cand & ~self.closed[pivot])
        rest = cand & ~(1 << pivot)
        if self._clique_cover_bound(rest) > with_pivot.bit_count():
            without = self.solve(rest)
            if without.bit_count() > with_pivot.bit_count():
                return taken | without
        return taken | with_pivot


def max_independent_set_bb(g: Graph) -> frozenset[int]:
    """Maximum independent set; the result is re-verified before returning."""
    solver = _BranchAndBound(g)
    mask = solver.solve((1 << g.n) - 1)
    result = frozenset(_bits(mask))
    if not is_independent_set(g, result):
        raise AssertionError("branch and bound produced a dependent set")
    logger.debug("MIS: n=%d size=%d branches=%d", g.n, len(result), solver.branches)
    return result
