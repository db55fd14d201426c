"""Minimum vertex cover on grid graphs through König's theorem."""

import logging
from collections import deque

from networkx.algorithms.bipartite import hopcroft_karp_matching

from tss_geo.errors import InputError
from tss_geo.graphcore.geometry import GridCoords
from tss_geo.graphcore.graph import Graph
from tss_geo.graphcore.validators import validate_grid_graph

logger = logging.getLogger(__name__)


def min_vertex_cover_grid(g: Graph, coords: GridCoords) -> frozenset[int]:
    """Minimum vertex cover of a certified grid graph.

    Left side = points with even x+y. After a maximum matching, alternate from
    unmatched left vertices (non-matching edges left->right, matching edges
    right->left); the cover is (left \\ reached) | (right & reached).

    Raises:
        InputError: if ``coords`` is not a grid certificate for ``g``.
    """
    report = validate_grid_graph(g, coords)
    if not report.ok:
        violation = report.first()
        raise InputError(
            f"invalid grid certificate: {violation.message if violation else ''}",
            details=report.to_dict(),
        )

    left = {v for v, p in enumerate(coords.coord) if (p.x + p.y) % 2 == 0}
    right = set(g.vertices()) - left
    matching = hopcroft_karp_matching(g.to_networkx(), top_nodes=left)
    mate: dict[int, int] = {int(u): int(v) for u, v in matching.items()}

    reached: set[int] = set()
    queue = deque(v for v in sorted(left) if v not in mate)
    reached.update(queue)
    while queue:
        u = queue.popleft()
        for w in sorted(g.neighbors(u)):
            if w in reached or mate.get(u) == w:
                continue
            reached.add(w)
            partner = mate.get(w)
            if partner is not None and partner not in reached:
                reached.add(partner)
                queue.append(partner)

    cover = (left - reached) | (right & reached)
    logger.debug("grid VC: |M|=%d |C|=%d", len(mate) // 2, len(cover))
    return frozenset(cover)
