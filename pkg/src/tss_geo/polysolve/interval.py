"""Minimum vertex cover on interval graphs given an interval model."""

from tss_geo.graphcore.geometry import IntervalModel


def max_independent_set_interval(model: IntervalModel) -> list[int]:
    """Earliest-right-endpoint greedy sweep; ties by smaller index.

    Closed intervals: an interval is taken when it starts strictly after the
    right endpoint of the last one taken.
    """
    order = sorted(range(len(model)), key=lambda i: (model.intervals[i][1], i))
    chosen: list[int] = []
    last_hi = None
    for i in order:
        lo, hi = model.intervals[i]
        if last_hi is None or lo > last_hi:
            chosen.append(i)
            last_hi = hi
    return chosen


def min_vertex_cover_interval(model: IntervalModel) -> frozenset[int]:
    """Complement of the greedy maximum independent set."""
    independent = set(max_independent_set_interval(model))
    return frozenset(v for v in range(len(model)) if v not in independent)
