"""Representation validators that report violations instead of raising."""

from dataclasses import dataclass, field
from typing import Any

from tss_geo.graphcore.geometry import GridCoords, GridPoint
from tss_geo.graphcore.graph import Graph


@dataclass(frozen=True, slots=True)
class Violation:
    code: str
    message: str
    subject: tuple[Any, ...] = ()


@dataclass(slots=True)
class ValidationReport:
    """Outcome of a validator run; empty ``violations`` means accepted."""

    violations: list[Violation] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def add(self, code: str, message: str, *subject: Any) -> None:
        self.violations.append(Violation(code, message, tuple(subject)))

    def first(self) -> Violation | None:
        return self.violations[0] if self.violations else None

    def to_dict(self) -> dict[str, Any]:
        return {
            "ok": self.ok,
            "violations": [
                {"code": v.code, "message": v.message, "subject": list(v.subject)}
                for v in self.violations
            ],
        }

    def __bool__(self) -> bool:
        return self.ok


def validate_grid_graph(g: Graph, coords: GridCoords) -> ValidationReport:
    """Check that ``g`` is the grid graph induced by ``coords``.

    Stops at the first violating pair: a duplicate point, an edge whose
    endpoints are not at L1-distance 1, or a missing edge between points at
    L1-distance 1.
    """
    report = ValidationReport()
    if len(coords) != g.n:
        report.add(
            "coverage",
            f"coords cover {len(coords)} vertices, graph has {g.n}",
        )
        return report

    owner: dict[GridPoint, int] = {}
    for v, p in enumerate(coords.coord):
        if p in owner:
            report.add(
                "duplicate_point",
                f"vertices {owner[p]} and {v} share point ({p.x}, {p.y})",
                owner[p],
                v,
            )
            return report
        owner[p] = v

    for u, v in g.sorted_edges:
        dist = coords.coord[u].l1(coords.coord[v])
        if dist != 1:
            report.add(
                "edge_not_unit",
                f"edge ({u}, {v}) joins points at L1-distance {dist}",
                u,
                v,
            )
            return report

    for u, p in enumerate(coords.coord):
        for dx, dy in ((1, 0), (0, 1)):
            v = owner.get(p.step(dx, dy))
            if v is not None and not g.has_edge(u, v):
                report.add(
                    "missing_edge",
                    f"vertices {u} and {v} are grid neighbours but not adjacent",
                    min(u, v),
                    max(u, v),
                )
                return report
    return report
