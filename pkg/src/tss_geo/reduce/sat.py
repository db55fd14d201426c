"""Restricted planar 3-SAT to planar TSS, in plain and majority flavours.

Each variable x_i becomes an 11-vertex gadget and each clause C_j a single
vertex y_j. Gadget vertex ``name`` of variable index ``i`` (0-based) sits at
``11 * i + offset(name)``; clause vertices follow at ``11 * n + j``.
"""

import logging
from collections.abc import Iterable

from tss_geo.errors import ContractViolation
from tss_geo.graphcore.graph import Edge, Graph
from tss_geo.reduce.artifact import (
    GADGET_NAMES,
    BudgetRecord,
    ReductionArtifact,
    Role,
)
from tss_geo.reduce.cnf import (
    Assignment,
    CnfFormula,
    satisfies,
    validate_restricted_3sat,
)
from tss_geo.reduce.majority import Augmenter, cherry_middles
from tss_geo.tsscore.activation import is_target_set
from tss_geo.tsscore.instance import TSSInstance
from tss_geo.tsscore.thresholds import is_majority

logger = logging.getLogger(__name__)

GADGET_SIZE = len(GADGET_NAMES)
GADGET_EDGES: tuple[tuple[str, str], ...] = (
    ("a", "t"),
    ("a", "b"),
    ("a", "c"),
    ("b", "d"),
    ("c", "d"),
    ("d", "T"),
    ("t", "T"),
    ("T", "F"),
    ("F", "p3"),
    ("p3", "p2"),
    ("p2", "p1"),
    ("p1", "f"),
)
THRESHOLD_TWO = frozenset({"t", "T", "F", "a"})
# Seeds on these gadget vertices are read as x_i = 0, all others as x_i = 1.
FALSE_SIDE = frozenset({"F", "f", "p1", "p2", "p3"})

_OFFSET = {name: i for i, name in enumerate(GADGET_NAMES)}


def gadget_vertex(i: int, name: str) -> int:
    return GADGET_SIZE * i + _OFFSET[name]


def _require_restricted(f: CnfFormula) -> None:
    report = validate_restricted_3sat(f)
    if not report.ok:
        raise ContractViolation(
            "formula is not a restricted 3-SAT instance", details=report.to_dict()
        )


def _base_layout(f: CnfFormula) -> tuple[Graph, list[int], list[Role]]:
    n = f.num_vars
    edges: list[Edge] = []
    thresholds: list[int] = []
    roles: list[Role] = []
    for i in range(n):
        for name in GADGET_NAMES:
            thresholds.append(2 if name in THRESHOLD_TWO else 1)
            roles.append(Role.gadget(i + 1, name))
        edges.extend(
            (gadget_vertex(i, a), gadget_vertex(i, b)) for a, b in GADGET_EDGES
        )
    for j, clause in enumerate(f.clauses):
        y = GADGET_SIZE * n + j
        thresholds.append(1)
        roles.append(Role.clause(j))
        for lit in clause:
            side = "t" if lit > 0 else "f"
            edges.append((gadget_vertex(abs(lit) - 1, side), y))
    return Graph(len(thresholds), edges), thresholds, roles


def sat_to_planar_tss(f: CnfFormula) -> ReductionArtifact:
    """Build (G, t, k = n) with m + 11n vertices, max degree 4, thresholds <= 2.

    Raises:
        ContractViolation: if ``f`` fails the restricted 3-SAT check.
    """
    _require_restricted(f)
    graph, thresholds, roles = _base_layout(f)
    n = f.num_vars
    inst = TSSInstance.build(graph, thresholds, n)
    if graph.max_degree > 4:
        raise AssertionError(f"gadget graph has degree {graph.max_degree}")
    logger.info("sat2tss: n=%d m=%d -> %d vertices", n, f.num_clauses, graph.n)
    return ReductionArtifact(
        reduction="sat2tss",
        graph=graph,
        k=n,
        provenance=tuple(roles),
        budget=BudgetRecord("k = n", (("n", n),)),
        instance=inst,
        counters={"n": n, "m": f.num_clauses},
        source=f,
    )


def _formula(art: ReductionArtifact) -> CnfFormula:
    if not isinstance(art.source, CnfFormula):
        raise ContractViolation(f"{art.reduction} artifact has no source formula")
    return art.source


def assignment_to_target_set(art: ReductionArtifact, a: Assignment) -> set[int]:
    """S = {T_i : x_i = 1} together with {F_i : x_i = 0}.

    The result spreads only when ``a`` satisfies the formula; callers verify.
    """
    f = _formula(art)
    if len(a.values) != f.num_vars:
        raise ContractViolation(
            f"assignment has {len(a.values)} values for {f.num_vars} variables"
        )
    return {
        gadget_vertex(i, "T" if a.values[i] else "F") for i in range(f.num_vars)
    }


def target_set_to_assignment(art: ReductionArtifact, seed: Iterable[int]) -> Assignment:
    """Read an assignment off a target set of size at most n.

    Every gadget must hold exactly one seed, since T_i and F_i cannot be
    reached from outside their gadget. A seed on the path side of the gadget
    stands for F_i, any other seed for T_i.

    Raises:
        ContractViolation: if ``seed`` is larger than n or does not spread.
    """
    f = _formula(art)
    inst = art.require_instance()
    chosen = inst.graph.check_vertices(seed)
    if len(chosen) > f.num_vars:
        raise ContractViolation(
            f"target set of size {len(chosen)} exceeds n={f.num_vars}",
            details={"seed": sorted(chosen)},
        )
    if not is_target_set(inst, chosen):
        raise ContractViolation(
            "seed is not a target set", details={"seed": sorted(chosen)}
        )

    picks: dict[int, str] = {}
    for v in sorted(chosen):
        role = art.provenance[v]
        var = role.ref[0] if role.kind == "gadget" else None
        if var is None or var in picks:
            raise ContractViolation(
                "target set does not hold one seed per gadget",
                details={"seed": sorted(chosen), "vertex": v},
            )
        picks[var] = role.name
    values = tuple(picks[i + 1] not in FALSE_SIDE for i in range(f.num_vars))
    result = Assignment(values)
    if not satisfies(f, result):
        raise AssertionError("recovered assignment does not satisfy the formula")
    return result


def sat_to_planar_majority_tss(f: CnfFormula) -> ReductionArtifact:
    """Majority variant: k = n + alpha = 2n + beta.

    Every gadget gets a cherry on d_i (threshold raised to 2) and a leaf on
    F_i; each clause vertex with three literals gets a cherry (threshold 2).
    beta counts those clauses and alpha = n + beta counts all cherries.

    Raises:
        ContractViolation: if ``f`` fails the restricted 3-SAT check.
    """
    _require_restricted(f)
    graph, thresholds, roles = _base_layout(f)
    n = f.num_vars
    aug = Augmenter.over(graph, thresholds, roles)
    for i in range(n):
        aug.leaf(gadget_vertex(i, "F"))
        d = gadget_vertex(i, "d")
        aug.cherry(d)
        aug.thresholds[d] = 2
    beta = 0
    for j, clause in enumerate(f.clauses):
        if len(clause) == 3:
            y = GADGET_SIZE * n + j
            aug.cherry(y)
            aug.thresholds[y] = 2
            beta += 1

    alpha = aug.cherries
    inst = TSSInstance.build(aug.graph(), aug.thresholds, n + alpha)
    if not is_majority(inst) or inst.graph.max_degree > 4:
        raise AssertionError("majority gadget graph violates its class")
    logger.info(
        "sat2majority: n=%d m=%d beta=%d -> %d vertices, k=%d",
        n,
        f.num_clauses,
        beta,
        inst.n,
        inst.budget,
    )
    return ReductionArtifact(
        reduction="sat2majority",
        graph=inst.graph,
        k=inst.budget,
        provenance=tuple(aug.roles),
        budget=BudgetRecord("k = n + alpha", (("n", n), ("alpha", alpha))),
        instance=inst,
        counters={
            "n": n,
            "m": f.num_clauses,
            "alpha": alpha,
            "beta": beta,
            "leaves": aug.leaves,
        },
        source=f,
    )


def assignment_to_majority_target_set(
    art: ReductionArtifact, a: Assignment
) -> set[int]:
    return assignment_to_target_set(art, a) | set(cherry_middles(art))


def majority_target_set_to_assignment(
    art: ReductionArtifact, seed: Iterable[int]
) -> Assignment:
    """Drop cherry seeds, move leaf seeds to F_i, then decode as the base case.

    Raises:
        ContractViolation: if ``seed`` exceeds k or does not spread.
    """
    f = _formula(art)
    inst = art.require_instance()
    chosen = inst.graph.check_vertices(seed)
    if len(chosen) > art.k:
        raise ContractViolation(
            f"target set of size {len(chosen)} exceeds k={art.k}",
            details={"seed": sorted(chosen)},
        )
    if not is_target_set(inst, chosen):
        raise ContractViolation(
            "seed is not a target set", details={"seed": sorted(chosen)}
        )
    base_seed: set[int] = set()
    for v in chosen:
        role = art.provenance[v]
        if role.kind == "leaf":
            base_seed.add(role.ref[0])
        elif role.kind != "cherry":
            base_seed.add(v)
    return target_set_to_assignment(sat_to_planar_tss(f), base_seed)
