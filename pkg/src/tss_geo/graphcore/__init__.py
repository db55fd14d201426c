"""Graphs, exact rational geometry and representation validators."""

from tss_geo.graphcore.geometry import (
    DiskRepresentation,
    GeoPoint,
    GridCoords,
    GridPoint,
    IntervalModel,
    Rational,
    format_rational,
    intersection_graph_disks,
    intersection_graph_grid_points,
    intersection_graph_intervals,
    parse_rational,
    squared_distance,
)
from tss_geo.graphcore.graph import (
    Edge,
    Graph,
    check_regular,
    complete_graph,
    cycle_graph,
    is_independent_set,
    is_vertex_cover,
    normalize_edge,
    octahedron_graph,
    path_graph,
)
from tss_geo.graphcore.validators import (
    ValidationReport,
    Violation,
    validate_grid_graph,
)

__all__ = [
    "DiskRepresentation",
    "Edge",
    "GeoPoint",
    "Graph",
    "GridCoords",
    "GridPoint",
    "IntervalModel",
    "Rational",
    "ValidationReport",
    "Violation",
    "check_regular",
    "complete_graph",
    "cycle_graph",
    "format_rational",
    "intersection_graph_disks",
    "intersection_graph_grid_points",
    "intersection_graph_intervals",
    "is_independent_set",
    "is_vertex_cover",
    "normalize_edge",
    "octahedron_graph",
    "parse_rational",
    "path_graph",
    "squared_distance",
    "validate_grid_graph",
]
