"""Rectilinear embeddings and their validator."""

from collections.abc import Mapping
from dataclasses import dataclass

from tss_geo.errors import InputError
from tss_geo.graphcore.geometry import GridPoint
from tss_geo.graphcore.graph import Edge, Graph, normalize_edge
from tss_geo.graphcore.validators import ValidationReport

Polyline = tuple[GridPoint, ...]


@dataclass(frozen=True, slots=True)
class RectilinearEmbedding:
    """Integer vertex points plus one unit-step polyline per edge.

    ``epath`` is keyed by the normalized edge; a polyline may run in either
    direction between its endpoints.
    """

    vpoint: tuple[GridPoint, ...]
    epath: Mapping[Edge, Polyline]

    def polyline(self, u: int, v: int) -> Polyline:
        """The polyline of edge {u, v}, oriented from u to v.

        Raises:
            InputError: if the edge has no polyline.
        """
        points = self.epath.get(normalize_edge(u, v))
        if points is None:
            raise InputError(f"edge {(u, v)} is not embedded")
        if points[0] == self.vpoint[u]:
            return points
        return tuple(reversed(points))

    def all_points(self) -> list[GridPoint]:
        points = list(self.vpoint)
        for line in self.epath.values():
            points.extend(line)
        return points

    def translated(self, dx: int, dy: int) -> "RectilinearEmbedding":
        return RectilinearEmbedding(
            vpoint=tuple(p.step(dx, dy) for p in self.vpoint),
            epath={
                e: tuple(p.step(dx, dy) for p in line)
                for e, line in self.epath.items()
            },
        )


def polyline_interior_points(emb: RectilinearEmbedding, e: Edge) -> list[GridPoint]:
    """Interior points p_2..p_{g-1} of edge ``e = (u, v)``, ordered from u."""
    u, v = e
    return list(emb.polyline(u, v)[1:-1])


def embedding_area(emb: RectilinearEmbedding) -> int:
    """Bounding-box area over vertex points and polyline points."""
    points = emb.all_points()
    if not points:
        return 0
    xs = [p.x for p in points]
    ys = [p.y for p in points]
    return (max(xs) - min(xs)) * (max(ys) - min(ys))


def validate_embedding(g: Graph, emb: RectilinearEmbedding) -> ValidationReport:
    """Check injective vertex points, unit-step simple chains, matching
    endpoints, and disjointness of distinct edges' chains. Reports every
    violation found."""
    report = ValidationReport()
    if len(emb.vpoint) != g.n:
        report.add("coverage", f"{len(emb.vpoint)} vertex points for {g.n} vertices")
        return report

    owner: dict[GridPoint, int] = {}
    for v, p in enumerate(emb.vpoint):
        if p in owner:
            report.add(
                "vertex_points_not_injective",
                f"vertices {owner[p]} and {v} share ({p.x}, {p.y})",
                owner[p],
                v,
            )
        else:
            owner[p] = v

    for e in sorted(set(emb.epath) - g.edges):
        report.add("unknown_edge", f"polyline for non-edge {e}", *e)

    interior_owner: dict[GridPoint, Edge] = {}
    segment_owner: dict[frozenset[GridPoint], Edge] = {}
    for e in g.sorted_edges:
        line = emb.epath.get(e)
        if line is None:
            report.add("missing_polyline", f"edge {e} has no polyline", *e)
            continue
        _check_chain(report, e, line, emb)
        for p in line[1:-1]:
            if p in owner:
                report.add(
                    "interior_on_vertex",
                    f"edge {e} passes through vertex {owner[p]} at ({p.x}, {p.y})",
                    *e,
                )
            other = interior_owner.setdefault(p, e)
            if other != e:
                report.add(
                    "shared_point",
                    f"edges {other} and {e} share point ({p.x}, {p.y})",
                    other,
                    e,
                )
        for a, b in zip(line, line[1:], strict=False):
            seg = frozenset((a, b))
            other = segment_owner.setdefault(seg, e)
            if other != e:
                report.add(
                    "shared_segment",
                    f"edges {other} and {e} share a segment",
                    other,
                    e,
                )
    return report


def _check_chain(
    report: ValidationReport, e: Edge, line: Polyline, emb: RectilinearEmbedding
) -> None:
    u, v = e
    if len(line) < 2:
        report.add("short_polyline", f"edge {e} polyline has fewer than 2 points", *e)
        return
    ends = {line[0], line[-1]}
    if ends != {emb.vpoint[u], emb.vpoint[v]}:
        report.add(
            "endpoint_mismatch",
            f"edge {e} polyline does not join its endpoints",
            *e,
        )
    for a, b in zip(line, line[1:], strict=False):
        if a.l1(b) != 1:
            report.add(
                "non_unit_step",
                f"edge {e} steps from ({a.x}, {a.y}) to ({b.x}, {b.y})",
                *e,
            )
    if len(set(line)) != len(line):
        report.add("self_intersecting", f"edge {e} polyline revisits a point", *e)

