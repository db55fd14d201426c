"""Simple undirected graphs over dense vertex ids 0..n-1."""

from collections.abc import Iterable
from functools import cached_property
from typing import Any

import networkx as nx

from tss_geo.errors import InputError

Edge = tuple[int, int]


def normalize_edge(u: int, v: int) -> Edge:
    """Return the edge as an ordered pair (min, max)."""
    return (u, v) if u < v else (v, u)


class Graph:
    """Immutable simple graph.

    Edges are stored as ordered pairs ``(u, v)`` with ``u < v``. Self-loops,
    duplicate edges and out-of-range endpoints are rejected on construction.
    """

    def __init__(self, n: int, edges: Iterable[Iterable[int]] = ()) -> None:
        if n < 0:
            raise InputError(f"vertex count must be >= 0, got {n}")
        adj: list[set[int]] = [set() for _ in range(n)]
        seen: set[Edge] = set()
        for raw in edges:
            pair = tuple(raw)
            if len(pair) != 2:
                raise InputError(f"edge must have two endpoints: {pair!r}")
            u, v = int(pair[0]), int(pair[1])
            if not (0 <= u < n and 0 <= v < n):
                raise InputError(
                    f"edge {(u, v)} out of range for n={n}",
                    details={"edge": [u, v], "n": n},
                )
            if u == v:
                raise InputError(f"self-loop at vertex {u}", details={"vertex": u})
            e = normalize_edge(u, v)
            if e in seen:
                raise InputError(f"duplicate edge {e}", details={"edge": list(e)})
            seen.add(e)
            adj[u].add(v)
            adj[v].add(u)
        self.n = n
        self.edges: frozenset[Edge] = frozenset(seen)
        self._adj: tuple[frozenset[int], ...] = tuple(frozenset(a) for a in adj)

    # --- queries ---

    def vertices(self) -> range:
        return range(self.n)

    def neighbors(self, v: int) -> frozenset[int]:
        self._check_vertex(v)
        return self._adj[v]

    def degree(self, v: int) -> int:
        return len(self.neighbors(v))

    def has_edge(self, u: int, v: int) -> bool:
        return normalize_edge(u, v) in self.edges

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        return tuple(len(a) for a in self._adj)

    @property
    def max_degree(self) -> int:
        return max(self.degrees, default=0)

    @cached_property
    def sorted_edges(self) -> tuple[Edge, ...]:
        """Edges in ascending lexicographic order."""
        return tuple(sorted(self.edges))

    @cached_property
    def adjacency_masks(self) -> tuple[int, ...]:
        """Neighbourhoods as integer bitsets, used by the exact solvers."""
        masks = []
        for nbrs in self._adj:
            mask = 0
            for w in nbrs:
                mask |= 1 << w
            masks.append(mask)
        return tuple(masks)

    def _check_vertex(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise InputError(f"vertex {v} out of range for n={self.n}")

    def check_vertices(self, vertices: Iterable[int]) -> frozenset[int]:
        """Validate a vertex collection and return it as a frozenset."""
        out = frozenset(vertices)
        for v in out:
            self._check_vertex(v)
        return out

    # --- derived graphs ---

    def subgraph(self, keep: Iterable[int]) -> tuple["Graph", list[int]]:
        """Induced subgraph on ``keep``, re-indexed in ascending order.

        Returns:
            The subgraph and the list mapping new index -> old index.
        """
        kept = sorted(self.check_vertices(keep))
        index = {old: new for new, old in enumerate(kept)}
        edges = [
            (index[u], index[v])
            for u, v in self.sorted_edges
            if u in index and v in index
        ]
        return Graph(len(kept), edges), kept

    def with_edges(self, n: int, extra: Iterable[Edge]) -> "Graph":
        """A graph on ``n >= self.n`` vertices holding these edges plus ``extra``."""
        return Graph(n, [*self.sorted_edges, *extra])

    # --- interop ---

    def to_networkx(self) -> nx.Graph:
        graph = nx.Graph()
        graph.add_nodes_from(range(self.n))
        graph.add_edges_from(self.sorted_edges)
        return graph

    @classmethod
    def from_networkx(cls, graph: Any) -> "Graph":
        """Build from a networkx graph whose nodes are 0..n-1."""
        n = graph.number_of_nodes()
        if set(graph.nodes) != set(range(n)):
            raise InputError("networkx graph nodes must be 0..n-1")
        return cls(n, graph.edges)

    def to_dict(self) -> dict[str, Any]:
        return {"n": self.n, "edges": [list(e) for e in self.sorted_edges]}

    # --- value semantics ---

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.edges == other.edges

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.num_edges})"


def check_regular(g: Graph, r: int) -> bool:
    """True iff every vertex has degree exactly ``r``."""
    return all(d == r for d in g.degrees)


def is_vertex_cover(g: Graph, cover: Iterable[int]) -> bool:
    chosen = set(cover)
    return all(u in chosen or v in chosen for u, v in g.edges)


def is_independent_set(g: Graph, vertices: Iterable[int]) -> bool:
    chosen = set(vertices)
    return not any(u in chosen and v in chosen for u, v in g.edges)


def complete_graph(n: int) -> Graph:
    return Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def cycle_graph(n: int) -> Graph:
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def octahedron_graph() -> Graph:
    """K_{2,2,2}: every vertex adjacent to all but its antipode."""
    antipode = {0: 1, 1: 0, 2: 3, 3: 2, 4: 5, 5: 4}
    return Graph(
        6,
        [(u, v) for u in range(6) for v in range(u + 1, 6) if antipode[u] != v],
    )
