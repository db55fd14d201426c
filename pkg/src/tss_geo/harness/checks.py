"""Equivalence checks: generate a source case, reduce or solve it, compare optima.

Each check knows how to encode its case into a JSON-ready payload and back, so
any failing case can be replayed from its repro file alone.
"""

import logging
import random
from abc import ABC, abstractmethod
from dataclasses import dataclass
from typing import Any, Generic, TypeVar

from pydantic import BaseModel

from tss_geo.embed.embedding import RectilinearEmbedding
from tss_geo.embed.router import compute_embedding
from tss_geo.errors import EmbeddingError, ParseError
from tss_geo.formats import (
    EmbeddingModel,
    FormulaModel,
    GraphModel,
    InstanceModel,
    coords_from_pairs,
    load_payload,
)
from tss_geo.graphcore.geometry import (
    GridCoords,
    IntervalModel,
    format_rational,
    intersection_graph_disks,
    intersection_graph_intervals,
)
from tss_geo.graphcore.graph import (
    Edge,
    Graph,
    check_regular,
    is_independent_set,
    is_vertex_cover,
)
from tss_geo.graphcore.validators import validate_grid_graph
from tss_geo.harness import generators as gen
from tss_geo.polysolve.dispatch import solve_unanimous
from tss_geo.polysolve.grid import min_vertex_cover_grid
from tss_geo.polysolve.independent_set import max_independent_set_bb
from tss_geo.polysolve.interval import (
    max_independent_set_interval,
    min_vertex_cover_interval,
)
from tss_geo.polysolve.vertex_cover import (
    max_independent_set_enumerate,
    min_vertex_cover_bruteforce,
)
from tss_geo.reduce.cnf import CnfFormula, satisfies, satisfying_assignments
from tss_geo.reduce.disks import (
    is_lift_witness,
    is_planar_to_is_udg,
    is_project_witness,
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
from tss_geo.reduce.sat import (
    assignment_to_majority_target_set,
    assignment_to_target_set,
    majority_target_set_to_assignment,
    sat_to_planar_majority_tss,
    sat_to_planar_tss,
    target_set_to_assignment,
)
from tss_geo.reduce.subdivision import (
    grid_lift_witness,
    grid_project_witness,
    planar_tss_to_grid_tss,
    subdivide_edge_once,
)
from tss_geo.tsscore.activation import is_target_set
from tss_geo.tsscore.instance import TSSInstance
from tss_geo.tsscore.oracle import TargetSetOptimum, min_target_set_bruteforce
from tss_geo.tsscore.preprocess import preprocess_cap_thresholds
from tss_geo.tsscore.thresholds import is_majority

logger = logging.getLogger(__name__)

CaseT = TypeVar("CaseT")
Payload = dict[str, Any]


@dataclass(frozen=True, slots=True)
class CheckContext:
    """Oracle settings shared by every case of a campaign."""

    budget_seconds: float | None = None
    workers: int = 1

    def optimum(
        self, inst: TSSInstance, k_max: int | None = None
    ) -> TargetSetOptimum | None:
        return min_target_set_bruteforce(
            inst, k_max, budget_seconds=self.budget_seconds, workers=self.workers
        )

    def require_optimum(self, inst: TSSInstance) -> TargetSetOptimum:
        found = self.optimum(inst)
        if found is None:
            raise AssertionError("V is always a target set")
        return found


def _dump(model: BaseModel) -> Payload:
    return model.model_dump(mode="json", exclude_none=True)


def _section(payload: Payload, key: str) -> Any:
    if key not in payload:
        raise ParseError(f"case payload lacks {key!r}", details={"key": key})
    return payload[key]


def _instance(payload: Payload) -> InstanceModel:
    return load_payload(_section(payload, "instance"), InstanceModel, origin="instance")


def _graph(payload: Payload) -> Graph:
    return load_payload(_section(payload, "graph"), GraphModel).to_domain()


def _embedding(payload: Payload) -> RectilinearEmbedding:
    return load_payload(_section(payload, "embedding"), EmbeddingModel).to_domain()


def _expect_target_set(
    problems: list[str], inst: TSSInstance, seed: Any, label: str, size: int
) -> None:
    chosen = set(seed)
    if not is_target_set(inst, chosen):
        problems.append(f"{label} {sorted(chosen)} is not a target set")
    elif len(chosen) > size:
        problems.append(f"{label} has size {len(chosen)} > {size}")


class EquivalenceCheck(ABC, Generic[CaseT]):
    """One family of randomized equivalence cases.

    ``check`` returns human-readable problems; an empty list is a pass. Oracle
    timeouts propagate as ``OracleTimeout`` and are counted as skips.
    """

    default_size = 6
    max_size = 12

    @property
    @abstractmethod
    def name(self) -> str:
        """Registry id."""

    @abstractmethod
    def generate(self, rng: random.Random, size: int, index: int) -> CaseT:
        """Draw case ``index`` with at most ``size`` source vertices."""

    @abstractmethod
    def encode(self, case: CaseT) -> Payload:
        """JSON-ready payload of a case."""

    @abstractmethod
    def decode(self, payload: Payload) -> CaseT:
        """Inverse of ``encode``; raises ParseError on malformed payloads."""

    @abstractmethod
    def check(self, case: CaseT, ctx: CheckContext) -> list[str]:
        """Run the case and list every broken relation."""


class _GraphCheck(EquivalenceCheck[Graph]):
    edge_probability = 0.3

    def generate(self, rng: random.Random, size: int, index: int) -> Graph:
        return gen.random_graph_er(rng, rng.randint(1, size), self.edge_probability)

    def encode(self, case: Graph) -> Payload:
        return {"graph": _dump(GraphModel.from_domain(case))}

    def decode(self, payload: Payload) -> Graph:
        return _graph(payload)


class _InstanceCheck(EquivalenceCheck[TSSInstance]):
    def encode(self, case: TSSInstance) -> Payload:
        return {"instance": _dump(InstanceModel.from_domain(case))}

    def decode(self, payload: Payload) -> TSSInstance:
        return _instance(payload).to_domain()


class UnanimousVcCheck(_GraphCheck):
    """Unanimous TSS optimum equals the minimum vertex cover."""

    name = "unanimous_vc"
    default_size = 10
    max_size = 16

    def check(self, case: Graph, ctx: CheckContext) -> list[str]:
        problems: list[str] = []
        inst = TSSInstance.unanimous(case)
        optimum = ctx.require_optimum(inst)
        cover = min_vertex_cover_bruteforce(case)
        if optimum.k_min != len(cover):
            problems.append(f"k_min={optimum.k_min} but |min VC|={len(cover)}")
        if not is_target_set(inst, cover):
            problems.append(f"cover {sorted(cover)} is not a target set")
        if not is_vertex_cover(case, optimum.witness):
            problems.append(f"witness {list(optimum.witness)} is not a cover")
        independent = max_independent_set_enumerate(case)
        if len(cover) + len(independent) != case.n:
            problems.append("|min VC| + |max IS| != n")
        return problems


class PreprocessCheck(_InstanceCheck):
    """Capping thresholds preserves k_min up to the forced vertices."""

    name = "preprocess"
    default_size = 8

    def generate(self, rng: random.Random, size: int, index: int) -> TSSInstance:
        n = rng.randint(1, size)
        return gen.random_instance(rng, n, 0.35, slack=2, budget=n)

    def check(self, case: TSSInstance, ctx: CheckContext) -> list[str]:
        problems: list[str] = []
        result = preprocess_cap_thresholds(case)
        reduced = result.instance
        pairs = zip(reduced.thresholds, reduced.graph.degrees, strict=True)
        if any(t > d for t, d in pairs):
            problems.append("a threshold still exceeds its degree")
        source = ctx.require_optimum(case)
        target = ctx.require_optimum(reduced)
        if source.k_min != target.k_min + result.budget_spent:
            problems.append(
                f"k_min={source.k_min} but reduced k_min={target.k_min} "
                f"+ spent={result.budget_spent}"
            )
        lifted = result.lift_target_set(target.witness)
        _expect_target_set(problems, case, lifted, "lifted witness", source.k_min)
        return problems


class SubdivideCheck(EquivalenceCheck[tuple[TSSInstance, Edge]]):
    """Subdividing one edge with a threshold-1 vertex keeps k_min."""

    name = "subdivide"
    default_size = 8

    def generate(
        self, rng: random.Random, size: int, index: int
    ) -> tuple[TSSInstance, Edge]:
        n = rng.randint(2, max(2, size))
        g = gen.random_graph_er(rng, n, 0.35)
        if g.num_edges == 0:
            g = g.with_edges(n, [(0, 1)])
        inst = TSSInstance.build(g, gen.random_thresholds(rng, g, slack=1))
        return inst, rng.choice(g.sorted_edges)

    def encode(self, case: tuple[TSSInstance, Edge]) -> Payload:
        inst, edge = case
        return {"instance": _dump(InstanceModel.from_domain(inst)), "edge": list(edge)}

    def decode(self, payload: Payload) -> tuple[TSSInstance, Edge]:
        u, v = _section(payload, "edge")
        return _instance(payload).to_domain(), (int(u), int(v))

    def check(self, case: tuple[TSSInstance, Edge], ctx: CheckContext) -> list[str]:
        inst, edge = case
        problems: list[str] = []
        out, step = subdivide_edge_once(inst, edge)
        source = ctx.require_optimum(inst)
        target = ctx.require_optimum(out)
        if source.k_min != target.k_min:
            problems.append(f"k_min changed from {source.k_min} to {target.k_min}")
        lifted = step.lift(source.witness)
        _expect_target_set(problems, out, lifted, "lifted witness", source.k_min)
        projected = step.project(out, target.witness)
        _expect_target_set(problems, inst, projected, "projected witness", target.k_min)
        return problems


class MajorityCheck(_InstanceCheck):
    """The leaf/cherry transform adds exactly alpha to k_min."""

    name = "majority"
    default_size = 8
    max_size = 10

    def generate(self, rng: random.Random, size: int, index: int) -> TSSInstance:
        g = gen.random_graph_er(rng, rng.randint(1, size), 0.35)
        return TSSInstance.build(g, gen.near_majority_thresholds(rng, g))

    def check(self, case: TSSInstance, ctx: CheckContext) -> list[str]:
        problems: list[str] = []
        art = majority_transform(case)
        out = art.require_instance()
        alpha = art.counters["alpha"]
        if not is_majority(out):
            problems.append("output thresholds are not majority")
        source = ctx.require_optimum(case)
        target = ctx.optimum(out, source.k_min + alpha)
        if target is None or target.k_min != source.k_min + alpha:
            got = None if target is None else target.k_min
            problems.append(
                f"k_min'={got} (searched up to {source.k_min + alpha}), "
                f"expected k_min + alpha = {source.k_min} + {alpha}"
            )
            return problems
        lifted = majority_lift_witness(art, source.witness)
        _expect_target_set(problems, out, lifted, "lifted witness", target.k_min)
        projected = majority_project_witness(art, target.witness)
        _expect_target_set(problems, case, projected, "projected witness", source.k_min)
        return problems


# (instance, embedding or None when the embedder failed, embedder seed)
PlanarCase = tuple[TSSInstance, RectilinearEmbedding | None, int]


class PlanarToGridCheck(EquivalenceCheck[PlanarCase]):
    """Laying a planar instance on the grid keeps k_min and the threshold class.

    A case whose embedding failed keeps the embedder seed and fails with that
    EmbeddingError when checked, so its repro file reproduces it.
    """

    name = "planar2grid"
    default_size = 5
    max_size = 6

    def generate(self, rng: random.Random, size: int, index: int) -> PlanarCase:
        embed_seed = 0
        emb: RectilinearEmbedding | None
        if index % 4 == 0:
            g, emb = gen.k4_embedding()
        else:
            g = gen.random_planar_graph(rng, rng.randint(2, max(2, size)))
            embed_seed = rng.randrange(1 << 16)
            try:
                emb = compute_embedding(g, seed=embed_seed)
            except EmbeddingError as exc:
                logger.warning("planar2grid case %d: %s", index, exc)
                emb = None
        if rng.random() < 0.5:
            thresholds = gen.majority_thresholds(g)
        else:
            thresholds = gen.random_thresholds(rng, g, low=1)
        return TSSInstance.build(g, thresholds), emb, embed_seed

    def encode(self, case: PlanarCase) -> Payload:
        inst, emb, embed_seed = case
        payload: Payload = {
            "instance": _dump(InstanceModel.from_domain(inst)),
            "embed_seed": embed_seed,
        }
        if emb is not None:
            payload["embedding"] = _dump(EmbeddingModel.from_domain(emb))
        return payload

    def decode(self, payload: Payload) -> PlanarCase:
        emb = _embedding(payload) if "embedding" in payload else None
        embed_seed = payload.get("embed_seed", 0)
        if not isinstance(embed_seed, int):
            raise ParseError("embed_seed must be an integer")
        return _instance(payload).to_domain(), emb, embed_seed

    def check(self, case: PlanarCase, ctx: CheckContext) -> list[str]:
        inst, emb, embed_seed = case
        if emb is None:
            emb = compute_embedding(inst.graph, seed=embed_seed)
        problems: list[str] = []
        art = planar_tss_to_grid_tss(inst, emb)
        out = art.require_instance()
        if art.coords is None or not validate_grid_graph(out.graph, art.coords).ok:
            problems.append("output is not a certified grid graph")
        if is_majority(inst) and not is_majority(out):
            problems.append("majority input produced a non-majority output")
        source = ctx.require_optimum(inst)
        target = ctx.optimum(out, source.k_min)
        if target is None or target.k_min != source.k_min:
            got = None if target is None else target.k_min
            problems.append(f"k_min'={got}, expected {source.k_min}")
            return problems
        lifted = grid_lift_witness(art, set(source.witness))
        _expect_target_set(problems, out, lifted, "lifted witness", source.k_min)
        projected = grid_project_witness(art, target.witness)
        _expect_target_set(problems, inst, projected, "projected witness", source.k_min)
        return problems


class _FormulaCheck(EquivalenceCheck[CnfFormula]):
    largest_handcrafted = 3

    def generate(self, rng: random.Random, size: int, index: int) -> CnfFormula:
        fixed = [
            f
            for f, _ in gen.HANDCRAFTED_FORMULAS
            if f.num_vars <= min(size, self.largest_handcrafted)
        ]
        if index < len(fixed):
            return fixed[index]
        return gen.random_restricted_3sat(rng, rng.randint(1, size))

    def encode(self, case: CnfFormula) -> Payload:
        return {"formula": _dump(FormulaModel.from_domain(case))}

    def decode(self, payload: Payload) -> CnfFormula:
        return load_payload(_section(payload, "formula"), FormulaModel).to_domain()


class SatToTssCheck(_FormulaCheck):
    """Satisfiable iff the gadget instance has a target set of size n."""

    name = "sat2tss"
    default_size = 3
    max_size = 4

    def check(self, case: CnfFormula, ctx: CheckContext) -> list[str]:
        problems: list[str] = []
        art = sat_to_planar_tss(case)
        out = art.require_instance()
        n, m = case.num_vars, case.num_clauses
        if out.n != m + 11 * n:
            problems.append(f"{out.n} vertices, expected m + 11n = {m + 11 * n}")
        if out.graph.max_degree > 4 or max(out.thresholds, default=0) > 2:
            problems.append("output exceeds degree 4 or threshold 2")
        models = satisfying_assignments(case)
        optimum = ctx.optimum(out, n)
        if (optimum is not None) != bool(models):
            problems.append(
                f"satisfiable={bool(models)} but target set of size <= {n} "
                f"exists={optimum is not None}"
            )
            return problems
        for a in models[:4]:
            seed = assignment_to_target_set(art, a)
            _expect_target_set(problems, out, seed, "lifted assignment", n)
            if target_set_to_assignment(art, seed) != a:
                problems.append(f"assignment {a.to_list()} does not round-trip")
        if optimum is not None:
            decoded = target_set_to_assignment(art, optimum.witness)
            if not satisfies(case, decoded):
                problems.append(f"decoded {decoded.to_list()} is not satisfying")
        return problems


class SatToMajorityCheck(_FormulaCheck):
    """Majority gadget variant: satisfiable iff a target set of size 2n + beta."""

    name = "sat2majority"
    default_size = 2
    max_size = 2
    largest_handcrafted = 2

    def check(self, case: CnfFormula, ctx: CheckContext) -> list[str]:
        problems: list[str] = []
        art = sat_to_planar_majority_tss(case)
        out = art.require_instance()
        n, beta = case.num_vars, art.counters["beta"]
        if art.k != 2 * n + beta:
            problems.append(f"k={art.k}, expected 2n + beta = {2 * n + beta}")
        if not is_majority(out) or out.graph.max_degree > 4:
            problems.append("output is not a majority instance of degree <= 4")
        models = satisfying_assignments(case)
        optimum = ctx.optimum(out, art.k)
        if (optimum is not None) != bool(models):
            problems.append(
                f"satisfiable={bool(models)} but target set of size <= {art.k} "
                f"exists={optimum is not None}"
            )
            return problems
        for a in models[:2]:
            seed = assignment_to_majority_target_set(art, a)
            _expect_target_set(problems, out, seed, "lifted assignment", art.k)
            if majority_target_set_to_assignment(art, seed) != a:
                problems.append(f"assignment {a.to_list()} does not round-trip")
        if optimum is not None:
            decoded = majority_target_set_to_assignment(art, optimum.witness)
            if not satisfies(case, decoded):
                problems.append(f"decoded {decoded.to_list()} is not satisfying")
        return problems


class _GridCaseCheck(EquivalenceCheck[tuple[Graph, GridCoords]]):
    def generate(
        self, rng: random.Random, size: int, index: int
    ) -> tuple[Graph, GridCoords]:
        return gen.random_grid_graph(rng, rng.randint(2, max(2, size)))

    def encode(self, case: tuple[Graph, GridCoords]) -> Payload:
        g, coords = case
        model = InstanceModel.from_domain(TSSInstance.unanimous(g), coords=coords)
        return {"instance": _dump(model)}

    def decode(self, payload: Payload) -> tuple[Graph, GridCoords]:
        model = _instance(payload)
        if model.coords is None:
            raise ParseError("grid case carries no coordinates")
        return model.graph.to_domain(), coords_from_pairs(model.coords)


class Exact2Check(_GridCaseCheck):
    """Leaf disks force threshold 2 everywhere and cost exactly z seeds."""

    name = "exact2"
    default_size = 12
    max_size = 14

    def check(self, case: tuple[Graph, GridCoords], ctx: CheckContext) -> list[str]:
        g, coords = case
        problems: list[str] = []
        inst = TSSInstance.build(g, gen.majority_thresholds(g))
        art = majority_grid_to_exact2_udg(inst, coords)
        out = art.require_instance()
        z = art.counters["z"]
        if any(t != 2 for t in out.thresholds):
            problems.append("some output threshold differs from 2")
        if out.graph.max_degree > 4:
            problems.append(f"output degree {out.graph.max_degree} > 4")
        if art.k != inst.budget + z:
            problems.append(f"k'={art.k}, expected k + z = {inst.budget + z}")
        rep = art.disks
        if rep is None or intersection_graph_disks(rep) != out.graph:
            problems.append("disk model does not realize the output graph")
        elif any(
            rep.intersects(leaf, w) != (w == art.provenance[leaf].ref[0])
            for leaf in art.vertices_of_kind("leaf")
            for w in out.graph.vertices()
            if w != leaf
        ):
            problems.append("a leaf disk meets a vertex other than its parent")
        if preprocess_cap_thresholds(out).instance != inst:
            problems.append("threshold capping does not recover the input")
        source = ctx.require_optimum(inst)
        target = ctx.optimum(out, source.k_min + z)
        if target is None or target.k_min != source.k_min + z:
            got = None if target is None else target.k_min
            problems.append(f"k_min'={got}, expected {source.k_min} + {z}")
            return problems
        lifted = exact2_lift_witness(art, source.witness)
        _expect_target_set(problems, out, lifted, "lifted witness", target.k_min)
        projected = exact2_project_witness(art, target.witness)
        _expect_target_set(problems, inst, projected, "projected witness", source.k_min)
        return problems


class GridVcCheck(_GridCaseCheck):
    """Koenig cover on grid graphs matches brute force."""

    name = "grid_vc"
    default_size = 14
    max_size = 18

    def check(self, case: tuple[Graph, GridCoords], ctx: CheckContext) -> list[str]:
        g, coords = case
        problems: list[str] = []
        cover = min_vertex_cover_grid(g, coords)
        brute = min_vertex_cover_bruteforce(g)
        if len(cover) != len(brute):
            problems.append(f"|grid VC|={len(cover)} but brute force {len(brute)}")
        if not is_vertex_cover(g, cover):
            problems.append(f"{sorted(cover)} is not a vertex cover")
        if len(brute) + len(max_independent_set_enumerate(g)) != g.n:
            problems.append("|min VC| + |max IS| != n")
        return problems


class IntervalVcCheck(EquivalenceCheck[IntervalModel]):
    """Greedy interval cover matches brute force and complements the sweep IS."""

    name = "interval_vc"
    default_size = 12
    max_size = 18

    def generate(self, rng: random.Random, size: int, index: int) -> IntervalModel:
        return gen.random_interval_model(rng, rng.randint(1, size))

    def encode(self, case: IntervalModel) -> Payload:
        return {
            "intervals": [
                [format_rational(lo), format_rational(hi)] for lo, hi in case.intervals
            ]
        }

    def decode(self, payload: Payload) -> IntervalModel:
        return IntervalModel.from_pairs(_section(payload, "intervals"))

    def check(self, case: IntervalModel, ctx: CheckContext) -> list[str]:
        problems: list[str] = []
        g = intersection_graph_intervals(case)
        cover = min_vertex_cover_interval(case)
        brute = min_vertex_cover_bruteforce(g)
        if len(cover) != len(brute):
            problems.append(f"|interval VC|={len(cover)} but brute force {len(brute)}")
        if not is_vertex_cover(g, cover):
            problems.append(f"{sorted(cover)} is not a vertex cover")
        independent = max_independent_set_interval(case)
        if not is_independent_set(g, independent):
            problems.append(f"{sorted(independent)} is not independent")
        if len(cover) + len(independent) != g.n:
            problems.append("|min VC| + |max IS| != n")
        solved = solve_unanimous(TSSInstance.unanimous(g), case)
        if solved.k_min != len(brute):
            problems.append(f"solve_unanimous gave {solved.k_min}")
        return problems


class MisBbCheck(_GraphCheck):
    """Branch-and-bound MIS matches enumeration."""

    name = "mis_bb"
    default_size = 14
    max_size = 20

    def check(self, case: Graph, ctx: CheckContext) -> list[str]:
        problems: list[str] = []
        bb = max_independent_set_bb(case)
        enum = max_independent_set_enumerate(case)
        if len(bb) != len(enum):
            problems.append(f"|MIS| by B&B {len(bb)} but enumeration {len(enum)}")
        if not is_independent_set(case, bb):
            problems.append(f"{sorted(bb)} is not independent")
        solved = solve_unanimous(TSSInstance.unanimous(case), fallback="bb")
        if solved.k_min != case.n - len(enum):
            problems.append(f"mis-bb unanimous solve gave {solved.k_min}")
        return problems


class IsToUdgCheck(EquivalenceCheck[tuple[Graph, RectilinearEmbedding]]):
    """Chain disks raise the independence number by exactly sum(3 q_e)."""

    name = "is2udg"
    default_size = 6
    max_size = 6

    def generate(
        self, rng: random.Random, size: int, index: int
    ) -> tuple[Graph, RectilinearEmbedding]:
        if index % 2 == 0:
            return gen.k4_embedding()
        return gen.octahedron_embedding()

    def encode(self, case: tuple[Graph, RectilinearEmbedding]) -> Payload:
        g, emb = case
        return {
            "graph": _dump(GraphModel.from_domain(g)),
            "embedding": _dump(EmbeddingModel.from_domain(emb)),
        }

    def decode(self, payload: Payload) -> tuple[Graph, RectilinearEmbedding]:
        return _graph(payload), _embedding(payload)

    def check(
        self, case: tuple[Graph, RectilinearEmbedding], ctx: CheckContext
    ) -> list[str]:
        g, emb = case
        problems: list[str] = []
        r = g.max_degree
        art = is_planar_to_is_udg(g, r, emb)
        extra = art.counters["sum_3q"]
        if art.disks is None or intersection_graph_disks(art.disks) != art.graph:
            problems.append("disk intersection graph differs from G'")
        if not check_regular(art.graph, r):
            problems.append(f"G' is not {r}-regular")
        bad = [e for e, plan in art.plans.items() if plan.y_e % 6]
        if bad:
            problems.append(f"subdivision counts not divisible by 6 on {bad}")
        source = max_independent_set_enumerate(g)
        target = max_independent_set_bb(art.graph)
        if len(target) != len(source) + extra:
            problems.append(
                f"alpha(G')={len(target)}, expected {len(source)} + {extra}"
            )
        lifted = is_lift_witness(art, source)
        if not is_independent_set(art.graph, lifted):
            problems.append("lifted set is not independent in G'")
        elif len(lifted) != len(source) + extra:
            problems.append(f"lifted set has size {len(lifted)}")
        projected = is_project_witness(art, target)
        if not is_independent_set(g, projected):
            problems.append("projected set is not independent in G")
        elif len(projected) < len(target) - extra:
            problems.append(f"projected set lost more than {extra} vertices")
        return problems


_REGISTRY: dict[str, type[EquivalenceCheck[Any]]] = {
    "unanimous_vc": UnanimousVcCheck,
    "preprocess": PreprocessCheck,
    "subdivide": SubdivideCheck,
    "majority": MajorityCheck,
    "planar2grid": PlanarToGridCheck,
    "sat2tss": SatToTssCheck,
    "sat2majority": SatToMajorityCheck,
    "exact2": Exact2Check,
    "interval_vc": IntervalVcCheck,
    "grid_vc": GridVcCheck,
    "mis_bb": MisBbCheck,
    "is2udg": IsToUdgCheck,
}

CHECK_IDS = tuple(_REGISTRY)


def create_check(check_id: str) -> EquivalenceCheck[Any]:
    """Instantiate a registered check.

    Raises:
        ValueError: if the id is unknown.
    """
    cls = _REGISTRY.get(check_id)
    if cls is None:
        raise ValueError(f"Unsupported check: {check_id}")
    return cls()
