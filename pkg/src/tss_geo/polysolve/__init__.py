"""Polynomial solvers for unanimous thresholds plus exact VC/IS oracles."""

from tss_geo.polysolve.dispatch import solve_unanimous
from tss_geo.polysolve.grid import min_vertex_cover_grid
from tss_geo.polysolve.independent_set import max_independent_set_bb
from tss_geo.polysolve.interval import (
    max_independent_set_interval,
    min_vertex_cover_interval,
)
from tss_geo.polysolve.vertex_cover import (
    VCInstance,
    max_independent_set_enumerate,
    min_vertex_cover_bruteforce,
    unanimous_tss_to_vc,
    vc_to_unanimous_tss,
)

__all__ = [
    "VCInstance",
    "max_independent_set_bb",
    "max_independent_set_enumerate",
    "max_independent_set_interval",
    "min_vertex_cover_bruteforce",
    "min_vertex_cover_grid",
    "min_vertex_cover_interval",
    "solve_unanimous",
    "unanimous_tss_to_vc",
    "vc_to_unanimous_tss",
]
