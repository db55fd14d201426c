"""The deterministic threshold activation process."""

import logging
from collections.abc import Iterable, Sequence

from tss_geo.tsscore.instance import ActivationTrace, TSSInstance

logger = logging.getLogger(__name__)


def simulate(inst: TSSInstance, seed: Iterable[int]) -> ActivationTrace:
    """Run the synchronous activation process to its first fixed point.

    S_i = S_{i-1} ∪ {v : t(v) <= |N(v) ∩ S_{i-1}|}. Vertices with threshold 0
    join in round 1 whether or not they were seeded.

    Raises:
        InputError: if the seed names a vertex outside the graph.
    """
    g = inst.graph
    current = set(g.check_vertices(seed))
    counts = [0] * g.n
    for v in current:
        for w in g.neighbors(v):
            counts[w] += 1

    rounds = [frozenset(current)]
    while True:
        joined = [
            v
            for v in range(g.n)
            if v not in current and counts[v] >= inst.thresholds[v]
        ]
        if not joined:
            break
        for v in joined:
            current.add(v)
            for w in g.neighbors(v):
                counts[w] += 1
        rounds.append(frozenset(current))

    logger.debug(
        "simulate: |S_0|=%d rounds=%d final=%d/%d",
        len(rounds[0]),
        len(rounds) - 1,
        len(current),
        g.n,
    )
    return ActivationTrace(tuple(rounds))


def is_target_set(inst: TSSInstance, seed: Iterable[int]) -> bool:
    """True iff the process started from ``seed`` infects every vertex.

    The budget is not checked here.
    """
    g = inst.graph
    seed_set = g.check_vertices(seed)
    mask = 0
    for v in seed_set:
        mask |= 1 << v
    full = (1 << g.n) - 1
    return closure_mask(inst_neighbors(inst), inst.thresholds, mask) == full


def inst_neighbors(inst: TSSInstance) -> tuple[tuple[int, ...], ...]:
    g = inst.graph
    return tuple(tuple(sorted(g.neighbors(v))) for v in range(g.n))


def closure_mask(
    neighbors: Sequence[Sequence[int]],
    thresholds: Sequence[int],
    seed_mask: int,
) -> int:
    """Final infected set, as a bitset, of the process started at ``seed_mask``.

    Uses a counting work-queue; the fixed point equals the one reached by the
    round-synchronous rule because the process is monotone.
    """
    n = len(neighbors)
    active = seed_mask
    counts = [0] * n
    queue: list[int] = []
    for v in range(n):
        if seed_mask >> v & 1:
            queue.append(v)
        elif thresholds[v] <= 0:
            active |= 1 << v
            queue.append(v)
    while queue:
        v = queue.pop()
        for w in neighbors[v]:
            if active >> w & 1:
                continue
            counts[w] += 1
            if counts[w] >= thresholds[w]:
                active |= 1 << w
                queue.append(w)
    return active
