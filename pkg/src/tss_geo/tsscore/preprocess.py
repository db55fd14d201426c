"""Forced-vertex preprocessing and seed normalization."""

import logging
from collections.abc import Iterable
from dataclasses import dataclass, field
from typing import Any

from tss_geo.errors import ContractViolation
from tss_geo.tsscore.activation import is_target_set
from tss_geo.tsscore.instance import TSSInstance

logger = logging.getLogger(__name__)


@dataclass(slots=True)
class PreprocessResult:
    """Outcome of threshold capping.

    ``kept[i]`` is the source vertex of output vertex ``i``. When ``feasible``
    is false the source is a definite NO-instance and ``instance`` carries a
    budget clamped at 0.
    """

    instance: TSSInstance
    removed: list[int] = field(default_factory=list)
    budget_spent: int = 0
    feasible: bool = True
    kept: list[int] = field(default_factory=list)

    def lift_target_set(self, seed: Iterable[int]) -> set[int]:
        """Map a target set of the reduced instance back to the source."""
        return {self.kept[v] for v in seed} | set(self.removed)

    def to_dict(self) -> dict[str, Any]:
        return {
            "instance": self.instance.to_dict(),
            "removed": self.removed,
            "budget_spent": self.budget_spent,
            "feasible": self.feasible,
        }


def preprocess_cap_thresholds(inst: TSSInstance) -> PreprocessResult:
    """Remove every vertex whose threshold exceeds its degree.

    Such a vertex can never be infected by its neighbours, so it belongs to
    every target set. The lowest-index offender is removed first; each removal
    lowers its neighbours' thresholds by one (floored at 0) and the budget by
    one. Repeats until t(v) <= deg(v) holds everywhere.
    """
    g = inst.graph
    thresholds = list(inst.thresholds)
    degree = list(g.degrees)
    alive = [True] * g.n
    removed: list[int] = []

    while True:
        victim = next(
            (v for v in range(g.n) if alive[v] and thresholds[v] > degree[v]),
            None,
        )
        if victim is None:
            break
        alive[victim] = False
        removed.append(victim)
        for w in g.neighbors(victim):
            if alive[w]:
                degree[w] -= 1
                thresholds[w] = max(0, thresholds[w] - 1)

    kept = [v for v in range(g.n) if alive[v]]
    if not removed:
        return PreprocessResult(instance=inst, kept=kept)

    sub, _ = g.subgraph(kept)
    remaining = inst.budget - len(removed)
    feasible = remaining >= 0
    if not feasible:
        logger.info(
            "preprocess: %d forced vertices exceed budget %d",
            len(removed),
            inst.budget,
        )
    result = TSSInstance(
        sub,
        tuple(thresholds[v] for v in kept),
        max(remaining, 0),
    )
    return PreprocessResult(
        instance=result,
        removed=removed,
        budget_spent=len(removed),
        feasible=feasible,
        kept=kept,
    )


def normalize_seed(
    inst: TSSInstance,
    seed: Iterable[int],
    movable: Iterable[int] | None = None,
) -> set[int]:
    """Push seeds off vertices with threshold <= 1 onto their neighbours.

    A seeded vertex v with t(v) <= 1 and deg(v) >= 1 is swapped for its
    lowest-index neighbour that is neither seeded nor was seeded earlier in
    this run; v then activates in round 1 from that neighbour, so the result
    stays a target set of the same size. A vertex with no such neighbour keeps
    its seed. Every swap seeds a new vertex, so this terminates.

    With ``movable`` only those vertices give up their seeds; reductions use
    it to clear seeds off the vertices they added.

    Raises:
        ContractViolation: if ``seed`` is not a target set.
    """
    g = inst.graph
    current = set(g.check_vertices(seed))
    if not is_target_set(inst, current):
        raise ContractViolation(
            "normalize_seed requires a target set",
            details={"seed": sorted(current)},
        )

    visited = set(current)
    stuck: set[int] = set()
    if movable is not None:
        stuck = set(range(inst.n)) - set(movable)
    while True:
        candidate = next(
            (
                v
                for v in sorted(current - stuck)
                if inst.thresholds[v] <= 1 and g.degree(v) >= 1
            ),
            None,
        )
        if candidate is None:
            break
        target = next(
            (u for u in sorted(g.neighbors(candidate)) if u not in visited),
            None,
        )
        if target is None:
            stuck.add(candidate)
            continue
        current.discard(candidate)
        current.add(target)
        visited.add(target)

    return current
