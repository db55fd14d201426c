"""Activation process, exact oracle, preprocessing and threshold classes."""

from __future__ import annotations

import random

import pytest

from tss_geo.errors import ContractViolation, InputError, OracleTimeout
from tss_geo.graphcore.graph import Graph, cycle_graph, path_graph
from tss_geo.harness.generators import random_instance
from tss_geo.tsscore import oracle
from tss_geo.tsscore.activation import is_target_set, simulate
from tss_geo.tsscore.instance import TSSInstance
from tss_geo.tsscore.oracle import (
    min_target_set_bruteforce,
    min_target_set_small_thresholds,
)
from tss_geo.tsscore.preprocess import normalize_seed, preprocess_cap_thresholds
from tss_geo.tsscore.thresholds import (
    GENERAL,
    MAJORITY,
    UNANIMOUS,
    ThresholdClass,
    classify_thresholds,
    majority_threshold,
)

SEEDS = range(12)


def _star(leaves: int) -> Graph:
    return Graph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def test_instance_rejects_bad_thresholds_and_budget() -> None:
    g = path_graph(3)
    with pytest.raises(InputError, match="thresholds for 3 vertices"):
        TSSInstance.build(g, [1, 1])
    with pytest.raises(InputError, match="negative threshold"):
        TSSInstance.build(g, [1, -1, 1])
    with pytest.raises(InputError, match="budget"):
        TSSInstance.build(g, [1, 1, 1], -1)


def test_simulate_spreads_along_a_path_one_round_at_a_time() -> None:
    inst = TSSInstance.build(path_graph(4), [1, 1, 1, 1])

    trace = simulate(inst, [0])

    assert trace.rounds == (
        frozenset({0}),
        frozenset({0, 1}),
        frozenset({0, 1, 2}),
        frozenset({0, 1, 2, 3}),
    )
    assert trace.num_rounds == 3
    assert trace.activation_round(3) == 3
    assert trace.to_dict() == {"rounds": [[0], [0, 1], [0, 1, 2], [0, 1, 2, 3]]}


def test_threshold_zero_vertices_join_in_round_one() -> None:
    inst = TSSInstance.build(Graph(2), [0, 1])

    trace = simulate(inst, [])

    assert trace.rounds == (frozenset(), frozenset({0}))
    assert trace.activation_round(1) is None
    assert not is_target_set(inst, [])


def test_simulate_rejects_unknown_seed_vertices() -> None:
    inst = TSSInstance.unanimous(path_graph(2))
    with pytest.raises(InputError, match="out of range"):
        simulate(inst, [5])


@pytest.mark.parametrize("seed", SEEDS)
def test_traces_are_monotone_and_end_in_a_fixed_point(seed: int) -> None:
    rng = random.Random(seed)
    inst = random_instance(rng, 9, 0.35)
    start = {v for v in range(inst.n) if rng.random() < 0.3}

    trace = simulate(inst, start)

    for before, after in zip(trace.rounds, trace.rounds[1:], strict=False):
        assert before < after
    assert simulate(inst, trace.final).final == trace.final
    assert is_target_set(inst, start) == (len(trace.final) == inst.n)


@pytest.mark.parametrize("seed", SEEDS)
def test_supersets_of_target_sets_are_target_sets(seed: int) -> None:
    rng = random.Random(seed)
    inst = random_instance(rng, 8, 0.4)
    optimum = min_target_set_bruteforce(inst)
    assert optimum is not None

    extra = rng.randrange(inst.n)
    assert is_target_set(inst, {*optimum.witness, extra})


def test_bruteforce_returns_lexicographically_first_witness() -> None:
    inst = TSSInstance.unanimous(path_graph(3))

    optimum = min_target_set_bruteforce(inst)

    assert optimum is not None
    assert optimum.k_min == 1
    assert optimum.witness == (1,)
    assert optimum.to_dict() == {"k_min": 1, "witness": [1]}


def test_bruteforce_respects_k_max() -> None:
    inst = TSSInstance.unanimous(cycle_graph(6))

    assert min_target_set_bruteforce(inst, 2) is None
    optimum = min_target_set_bruteforce(inst, 3)
    assert optimum is not None
    assert optimum.k_min == 3
    assert optimum.witness == (0, 2, 4)


def test_bruteforce_empty_seed_when_everything_self_activates() -> None:
    inst = TSSInstance.build(path_graph(3), [0, 1, 1])

    optimum = min_target_set_bruteforce(inst)

    assert optimum is not None
    assert optimum.k_min == 0
    assert optimum.witness == ()


def test_bruteforce_times_out(monkeypatch: pytest.MonkeyPatch) -> None:
    monkeypatch.setattr(oracle, "_CHECK_EVERY", 1)
    inst = TSSInstance.unanimous(cycle_graph(8))

    with pytest.raises(OracleTimeout, match="time budget"):
        min_target_set_bruteforce(inst, budget_seconds=-1.0)


@pytest.mark.parametrize("seed", SEEDS)
def test_bruteforce_witness_is_minimal(seed: int) -> None:
    rng = random.Random(seed)
    inst = random_instance(rng, 8, 0.3, slack=1)

    optimum = min_target_set_bruteforce(inst)

    assert optimum is not None
    assert is_target_set(inst, optimum.witness)
    if optimum.k_min > 0:
        assert min_target_set_bruteforce(inst, optimum.k_min - 1) is None


@pytest.mark.slow
def test_bruteforce_answer_does_not_depend_on_worker_count() -> None:
    inst = TSSInstance.unanimous(cycle_graph(16))

    single = min_target_set_bruteforce(inst, workers=1)
    pooled = min_target_set_bruteforce(inst, workers=2)

    assert single == pooled
    assert single is not None
    assert single.k_min == 8


def test_small_threshold_solver_seeds_one_vertex_per_dormant_component() -> None:
    g = Graph(6, [(0, 1), (3, 4)])
    inst = TSSInstance.build(g, [1, 1, 0, 1, 0, 1])

    optimum = min_target_set_small_thresholds(inst)

    assert optimum.k_min == 2
    assert optimum.witness == (0, 5)
    assert is_target_set(inst, optimum.witness)


@pytest.mark.parametrize("seed", SEEDS)
def test_small_threshold_solver_matches_bruteforce(seed: int) -> None:
    rng = random.Random(seed)
    base = random_instance(rng, 9, 0.2)
    inst = TSSInstance.build(
        base.graph, [rng.randint(0, 1) for _ in range(base.n)]
    )

    fast = min_target_set_small_thresholds(inst)
    slow = min_target_set_bruteforce(inst)

    assert slow is not None
    assert fast.k_min == slow.k_min
    assert is_target_set(inst, fast.witness)


def test_small_threshold_solver_rejects_larger_thresholds() -> None:
    with pytest.raises(ValueError, match="<= 1"):
        min_target_set_small_thresholds(TSSInstance.unanimous(path_graph(3)))


def test_preprocess_removes_vertices_above_their_degree() -> None:
    inst = TSSInstance.build(_star(3), [5, 1, 1, 1], 2)

    result = preprocess_cap_thresholds(inst)

    assert result.removed == [0]
    assert result.budget_spent == 1
    assert result.feasible
    assert result.kept == [1, 2, 3]
    assert result.instance.thresholds == (0, 0, 0)
    assert result.instance.budget == 1
    assert result.lift_target_set([]) == {0}


def test_preprocess_reports_infeasible_budget() -> None:
    inst = TSSInstance.build(_star(2), [3, 2, 2], 1)

    result = preprocess_cap_thresholds(inst)

    # centre goes first, then both leaves exceed their new degree 0
    assert result.removed == [0, 1, 2]
    assert not result.feasible
    assert result.instance.budget == 0
    assert result.instance.n == 0


def test_preprocess_leaves_capped_instances_alone() -> None:
    inst = TSSInstance.unanimous(cycle_graph(4), 2)

    result = preprocess_cap_thresholds(inst)

    assert result.instance is inst
    assert result.removed == []
    assert result.kept == [0, 1, 2, 3]


@pytest.mark.parametrize("seed", SEEDS)
def test_preprocess_preserves_optimum_plus_spent_budget(seed: int) -> None:
    rng = random.Random(seed)
    inst = random_instance(rng, 8, 0.3, slack=2)

    result = preprocess_cap_thresholds(inst)
    source = min_target_set_bruteforce(inst)
    reduced = min_target_set_bruteforce(result.instance)

    assert source is not None and reduced is not None
    assert source.k_min == reduced.k_min + result.budget_spent
    assert is_target_set(inst, result.lift_target_set(reduced.witness))
    assert all(
        t <= d
        for t, d in zip(
            result.instance.thresholds, result.instance.graph.degrees, strict=True
        )
    )


def test_normalize_seed_walks_seeds_off_low_threshold_vertices() -> None:
    inst = TSSInstance.build(path_graph(3), [1, 1, 1])

    assert normalize_seed(inst, [0]) == {2}


def test_normalize_seed_only_moves_movable_vertices() -> None:
    inst = TSSInstance.build(path_graph(3), [1, 1, 1])

    assert normalize_seed(inst, [0], movable=[1, 2]) == {0}
    # vertex 1 takes the seed but may not pass it on
    assert normalize_seed(inst, [0], movable=[0]) == {1}


@pytest.mark.parametrize("seed", SEEDS)
def test_normalize_seed_keeps_size_and_target_set_property(seed: int) -> None:
    rng = random.Random(seed)
    inst = random_instance(rng, 8, 0.4)
    optimum = min_target_set_bruteforce(inst)
    assert optimum is not None

    normalized = normalize_seed(inst, optimum.witness)

    assert len(normalized) == optimum.k_min
    assert is_target_set(inst, normalized)


def test_normalize_seed_requires_a_target_set() -> None:
    inst = TSSInstance.unanimous(path_graph(3))
    with pytest.raises(ContractViolation, match="target set"):
        normalize_seed(inst, [0])


def test_threshold_classes() -> None:
    cycle = TSSInstance.unanimous(cycle_graph(4))
    classes = classify_thresholds(cycle)

    assert UNANIMOUS in classes
    assert MAJORITY not in classes
    assert GENERAL in classes
    assert ThresholdClass("exact", 2) in classes
    assert ThresholdClass("constant_bounded", 2) in classes
    assert str(ThresholdClass("exact", 2)) == "exact(2)"

    star = TSSInstance.build(_star(3), [2, 1, 1, 1])
    assert MAJORITY in classify_thresholds(star)
    assert [majority_threshold(d) for d in range(5)] == [0, 1, 1, 2, 2]
