"""Constructive reductions with provenance and witness translation."""

from tss_geo.reduce.artifact import (
    BudgetRecord,
    ReductionArtifact,
    Role,
    SubdivisionPlan,
)
from tss_geo.reduce.cnf import (
    Assignment,
    CnfFormula,
    parse_dimacs,
    satisfies,
    satisfying_assignments,
    validate_restricted_3sat,
)
from tss_geo.reduce.disks import (
    chain_centers,
    choose_w,
    clique_blowup_is,
    is_lift_witness,
    is_planar_to_is_udg,
    is_project_witness,
    regular_exact_c_tss,
)
from tss_geo.reduce.exact2 import (
    exact2_lift_witness,
    exact2_project_witness,
    majority_grid_to_exact2_udg,
)
from tss_geo.reduce.majority import (
    majority_lift_witness,
    majority_project_witness,
    majority_transform,
)
from tss_geo.reduce.registry import (
    REDUCTION_IDS,
    Reduction,
    ReductionInput,
    create_reduction,
)
from tss_geo.reduce.sat import (
    assignment_to_majority_target_set,
    assignment_to_target_set,
    gadget_vertex,
    majority_target_set_to_assignment,
    sat_to_planar_majority_tss,
    sat_to_planar_tss,
    target_set_to_assignment,
)
from tss_geo.reduce.subdivision import (
    SubdivisionStep,
    grid_lift_witness,
    grid_project_witness,
    planar_tss_to_grid_tss,
    subdivide_edge_once,
)

__all__ = [
    "REDUCTION_IDS",
    "Assignment",
    "BudgetRecord",
    "CnfFormula",
    "Reduction",
    "ReductionArtifact",
    "ReductionInput",
    "Role",
    "SubdivisionPlan",
    "SubdivisionStep",
    "assignment_to_majority_target_set",
    "assignment_to_target_set",
    "chain_centers",
    "choose_w",
    "clique_blowup_is",
    "create_reduction",
    "exact2_lift_witness",
    "exact2_project_witness",
    "gadget_vertex",
    "grid_lift_witness",
    "grid_project_witness",
    "is_lift_witness",
    "is_planar_to_is_udg",
    "is_project_witness",
    "majority_grid_to_exact2_udg",
    "majority_lift_witness",
    "majority_project_witness",
    "majority_target_set_to_assignment",
    "majority_transform",
    "parse_dimacs",
    "planar_tss_to_grid_tss",
    "regular_exact_c_tss",
    "sat_to_planar_majority_tss",
    "sat_to_planar_tss",
    "satisfies",
    "satisfying_assignments",
    "subdivide_edge_once",
    "target_set_to_assignment",
    "validate_restricted_3sat",
]
