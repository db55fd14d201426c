"""Exact minimum target sets by exhaustive search.

The search visits seed sets by increasing size and, within a size, in
lexicographic order, so the returned witness is the lexicographically first
optimal target set. Two exact prunings keep desk-scale instances fast:

* feasibility: if seeding the chosen prefix plus every still-available vertex
  does not infect the graph, no completion of the prefix will;
* blocking sets: a connected set X of at most three vertices that stays
  partly uninfected even when all of V \\ X is seeded must be hit by every
  target set. Pairwise-disjoint unhit blocking sets give a lower bound on the
  seeds still needed.

Neither pruning discards a branch that contains a target set, so the witness is
the same as plain enumeration would return.
"""

import logging
import time
from collections.abc import Sequence
from concurrent.futures import Future, ProcessPoolExecutor
from dataclasses import dataclass
from typing import Any

import networkx as nx

from tss_geo.errors import OracleTimeout
from tss_geo.tsscore.activation import closure_mask, inst_neighbors
from tss_geo.tsscore.instance import TSSInstance

logger = logging.getLogger(__name__)

_CHECK_EVERY = 512
# Below this size process start-up costs more than the search itself.
_PARALLEL_MIN_VERTICES = 16


@dataclass(frozen=True, slots=True)
class TargetSetOptimum:
    k_min: int
    witness: tuple[int, ...]

    def to_dict(self) -> dict[str, Any]:
        return {"k_min": self.k_min, "witness": list(self.witness)}


@dataclass(frozen=True, slots=True)
class _SearchSpace:
    n: int
    neighbors: tuple[tuple[int, ...], ...]
    thresholds: tuple[int, ...]
    blocking: tuple[int, ...]

    @property
    def full(self) -> int:
        return (1 << self.n) - 1

    def spreads(self, seed_mask: int) -> bool:
        return closure_mask(self.neighbors, self.thresholds, seed_mask) == self.full


def _connected_small_sets(neighbors: Sequence[Sequence[int]]) -> list[int]:
    """Bitmasks of all connected vertex sets of size 1, 2 and 3."""
    found: set[int] = set()
    for v, nbrs in enumerate(neighbors):
        found.add(1 << v)
        for u in nbrs:
            found.add(1 << u | 1 << v)
        for i, u in enumerate(nbrs):
            for w in nbrs[i + 1 :]:
                found.add(1 << u | 1 << v | 1 << w)
    return sorted(found, key=lambda m: (m.bit_count(), m))


def _blocking_sets(
    neighbors: tuple[tuple[int, ...], ...], thresholds: tuple[int, ...]
) -> tuple[int, ...]:
    full = (1 << len(neighbors)) - 1
    minimal: list[int] = []
    for mask in _connected_small_sets(neighbors):
        if any(b & ~mask == 0 for b in minimal):
            continue
        reached = closure_mask(neighbors, thresholds, full & ~mask)
        if reached & mask != mask:
            minimal.append(mask)
    return tuple(minimal)


def _build_space(inst: TSSInstance) -> _SearchSpace:
    neighbors = inst_neighbors(inst)
    return _SearchSpace(
        n=inst.n,
        neighbors=neighbors,
        thresholds=inst.thresholds,
        blocking=_blocking_sets(neighbors, inst.thresholds),
    )


class _Search:
    """Depth-first lexicographic search for one seed-set size."""

    def __init__(self, space: _SearchSpace, deadline: float | None) -> None:
        self.space = space
        self.deadline = deadline
        self.nodes = 0
        n = space.n
        self.suffix = [((1 << n) - 1) & ~((1 << v) - 1) for v in range(n + 1)]

    def _tick(self) -> None:
        self.nodes += 1
        if (
            self.deadline is not None
            and self.nodes % _CHECK_EVERY == 0
            and time.monotonic() > self.deadline
        ):
            raise OracleTimeout(
                "brute-force oracle exceeded its time budget",
                details={"nodes": self.nodes},
            )

    def _hopeless(self, chosen: int, nxt: int, remaining: int) -> bool:
        available = self.suffix[nxt]
        used = 0
        needed = 0
        for block in self.space.blocking:
            if block & chosen:
                continue
            reachable = block & available
            if not reachable:
                return True
            if reachable & used == 0:
                used |= reachable
                needed += 1
                if needed > remaining:
                    return True
        return not self.space.spreads(chosen | available)

    def first(self, chosen: int, nxt: int, remaining: int) -> int | None:
        self._tick()
        if remaining == 0:
            return chosen if self.space.spreads(chosen) else None
        if self._hopeless(chosen, nxt, remaining):
            return None
        for v in range(nxt, self.space.n - remaining + 1):
            found = self.first(chosen | 1 << v, v + 1, remaining - 1)
            if found is not None:
                return found
        return None


def _search_with_first(
    space: _SearchSpace, size: int, head: int, time_left: float | None
) -> int | None:
    """Lexicographically first target set of ``size`` whose minimum is ``head``."""
    deadline = None if time_left is None else time.monotonic() + time_left
    search = _Search(space, deadline)
    return search.first(1 << head, head + 1, size - 1)


def _mask_to_tuple(mask: int) -> tuple[int, ...]:
    return tuple(v for v in range(mask.bit_length()) if mask >> v & 1)


def min_target_set_bruteforce(
    inst: TSSInstance,
    k_max: int | None = None,
    *,
    budget_seconds: float | None = None,
    workers: int = 1,
) -> TargetSetOptimum | None:
    """Smallest target set of size at most ``k_max`` (default n).

    Args:
        inst: Instance to solve; its budget is ignored.
        k_max: Largest size to try.
        budget_seconds: Wall-clock budget; ``None`` searches without limit.
        workers: Worker processes; sizes are split by the smallest seeded
            vertex and merged in that order, so the answer does not depend on
            the worker count.

    Returns:
        The optimum with its lexicographically first witness, or ``None`` when
        no target set of size <= k_max exists.

    Raises:
        OracleTimeout: if the budget runs out.
    """
    n = inst.n
    limit = n if k_max is None else min(k_max, n)
    started = time.monotonic()
    deadline = None if budget_seconds is None else started + budget_seconds
    space = _build_space(inst)
    logger.debug(
        "oracle: n=%d k_max=%d blocking_sets=%d", n, limit, len(space.blocking)
    )

    if space.spreads(0):
        return TargetSetOptimum(0, ())

    pool: ProcessPoolExecutor | None = None
    if workers > 1 and n >= _PARALLEL_MIN_VERTICES:
        pool = ProcessPoolExecutor(max_workers=workers)
    try:
        for size in range(1, limit + 1):
            found = _search_size(space, size, deadline, pool)
            if found is not None:
                witness = _mask_to_tuple(found)
                logger.debug(
                    "oracle: k_min=%d after %.3fs", size, time.monotonic() - started
                )
                return TargetSetOptimum(size, witness)
    finally:
        if pool is not None:
            pool.shutdown(wait=False, cancel_futures=True)
    return None


def _search_size(
    space: _SearchSpace,
    size: int,
    deadline: float | None,
    pool: ProcessPoolExecutor | None,
) -> int | None:
    heads = range(0, space.n - size + 1)
    if pool is None:
        search = _Search(space, deadline)
        for head in heads:
            found = search.first(1 << head, head + 1, size - 1)
            if found is not None:
                return found
        return None

    time_left = None if deadline is None else max(0.0, deadline - time.monotonic())
    futures: list[Future[int | None]] = [
        pool.submit(_search_with_first, space, size, head, time_left) for head in heads
    ]
    try:
        for future in futures:
            found = future.result()
            if found is not None:
                return found
    finally:
        for future in futures:
            future.cancel()
    return None


def min_target_set_small_thresholds(inst: TSSInstance) -> TargetSetOptimum:
    """Exact optimum when every threshold is at most 1.

    A component containing a threshold-0 vertex infects itself; every other
    component needs exactly one seed. The witness takes each such component's
    smallest vertex.

    Raises:
        ValueError: if some threshold exceeds 1.
    """
    if any(t > 1 for t in inst.thresholds):
        raise ValueError("all thresholds must be <= 1")
    witness = []
    for component in nx.connected_components(inst.graph.to_networkx()):
        if all(inst.thresholds[v] == 1 for v in component):
            witness.append(min(component))
    witness.sort()
    return TargetSetOptimum(len(witness), tuple(witness))
