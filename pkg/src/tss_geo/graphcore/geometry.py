"""Exact rational geometry: grid points, disk and interval models.

Every predicate in this module works on ``fractions.Fraction`` values. Floats
are accepted only when parsing user input and are converted through their
shortest decimal representation.
"""

import math
from collections import defaultdict
from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from fractions import Fraction
from typing import Any

from tss_geo.errors import InputError
from tss_geo.graphcore.graph import Edge, Graph

Rational = Fraction

UNIT_STEPS: tuple[tuple[int, int], ...] = ((0, 1), (1, 0), (-1, 0), (0, -1))


def parse_rational(value: Any) -> Fraction:
    """Parse ``"p/q"``, integers and decimal strings into a Fraction."""
    if isinstance(value, bool):
        raise InputError(f"not a rational: {value!r}")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, float):
        if not math.isfinite(value):
            raise InputError(f"not a finite rational: {value!r}")
        return Fraction(repr(value))
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise InputError(f"not a rational: {value!r}") from exc
    raise InputError(f"not a rational: {value!r}")


def format_rational(value: Fraction) -> str:
    """Canonical ``"p/q"`` text (lowest terms, q > 0, integers as ``"p/1"``)."""
    return f"{value.numerator}/{value.denominator}"


@dataclass(frozen=True, slots=True, order=True)
class GridPoint:
    x: int
    y: int

    def l1(self, other: "GridPoint") -> int:
        return abs(self.x - other.x) + abs(self.y - other.y)

    def step(self, dx: int, dy: int) -> "GridPoint":
        return GridPoint(self.x + dx, self.y + dy)

    def scaled(self, factor: int) -> "GridPoint":
        return GridPoint(self.x * factor, self.y * factor)

    def to_geo(self) -> "GeoPoint":
        return GeoPoint(Fraction(self.x), Fraction(self.y))


@dataclass(frozen=True, slots=True)
class GeoPoint:
    x: Fraction
    y: Fraction

    def translate(self, dx: Fraction, dy: Fraction) -> "GeoPoint":
        return GeoPoint(self.x + dx, self.y + dy)

    def scale(self, factor: Fraction) -> "GeoPoint":
        return GeoPoint(self.x * factor, self.y * factor)


def squared_distance(p: GeoPoint, q: GeoPoint) -> Fraction:
    dx = p.x - q.x
    dy = p.y - q.y
    return dx * dx + dy * dy


@dataclass(frozen=True, slots=True)
class DiskRepresentation:
    """Closed disks of a shared diameter, one center per vertex."""

    diameter: Fraction
    centers: tuple[GeoPoint, ...]

    def __post_init__(self) -> None:
        if self.diameter <= 0:
            raise InputError(f"disk diameter must be positive, got {self.diameter}")

    def intersects(self, i: int, j: int) -> bool:
        bound = self.diameter * self.diameter
        return squared_distance(self.centers[i], self.centers[j]) <= bound


@dataclass(frozen=True, slots=True)
class GridCoords:
    """Vertex -> grid point map; injectivity is checked by the grid validator."""

    coord: tuple[GridPoint, ...]

    def __len__(self) -> int:
        return len(self.coord)

    def to_disks(self, diameter: Fraction = Fraction(1)) -> DiskRepresentation:
        return DiskRepresentation(diameter, tuple(p.to_geo() for p in self.coord))


@dataclass(frozen=True, slots=True)
class IntervalModel:
    """Closed intervals [lo, hi], one per vertex."""

    intervals: tuple[tuple[Fraction, Fraction], ...]

    def __post_init__(self) -> None:
        for i, (lo, hi) in enumerate(self.intervals):
            if lo > hi:
                raise InputError(
                    f"interval {i} has lo > hi: [{lo}, {hi}]",
                    details={"interval": i},
                )

    @classmethod
    def from_pairs(cls, pairs: Iterable[Sequence[Any]]) -> "IntervalModel":
        return cls(tuple((parse_rational(lo), parse_rational(hi)) for lo, hi in pairs))

    def __len__(self) -> int:
        return len(self.intervals)


def intersection_graph_disks(rep: DiskRepresentation) -> Graph:
    """Intersection graph of closed disks; tangent disks intersect.

    Centers are bucketed into square cells of side ``diameter``; two disks can
    only meet when their cells are equal or adjacent, so only those pairs are
    compared exactly.
    """
    d = rep.diameter
    cells: dict[tuple[int, int], list[int]] = defaultdict(list)
    for i, c in enumerate(rep.centers):
        cells[(math.floor(c.x / d), math.floor(c.y / d))].append(i)

    edges: set[Edge] = set()
    for (cx, cy), members in cells.items():
        for dx in (-1, 0, 1):
            for dy in (-1, 0, 1):
                others = cells.get((cx + dx, cy + dy))
                if not others:
                    continue
                for i in members:
                    for j in others:
                        if i < j and rep.intersects(i, j):
                            edges.add((i, j))
    return Graph(len(rep.centers), edges)


def intersection_graph_intervals(model: IntervalModel) -> Graph:
    """Interval graph of closed intervals (touching endpoints intersect)."""
    order = sorted(range(len(model)), key=lambda i: (model.intervals[i][0], i))
    edges: list[Edge] = []
    active: list[int] = []
    for i in order:
        lo, hi = model.intervals[i]
        active = [j for j in active if model.intervals[j][1] >= lo]
        edges.extend((min(i, j), max(i, j)) for j in active)
        active.append(i)
    return Graph(len(model), edges)


def intersection_graph_grid_points(points: Sequence[GridPoint]) -> Graph:
    """Grid graph induced by a set of distinct grid points."""
    index = {p: i for i, p in enumerate(points)}
    if len(index) != len(points):
        raise InputError("grid points must be distinct")
    edges = []
    for i, p in enumerate(points):
        for dx, dy in ((1, 0), (0, 1)):
            j = index.get(p.step(dx, dy))
            if j is not None:
                edges.append((i, j))
    return Graph(len(points), edges)
