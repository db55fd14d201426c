"""JSON wire formats.

Domain objects stay plain dataclasses; these pydantic models only parse and
emit files. Rationals travel as canonical ``"p/q"`` strings.
"""

import json
from fractions import Fraction
from pathlib import Path
from typing import Annotated, Any, Literal, TypeVar

from pydantic import (
    BaseModel,
    BeforeValidator,
    ConfigDict,
    Field,
    PlainSerializer,
    RootModel,
)
from pydantic import ValidationError as PydanticValidationError

from tss_geo.embed.embedding import RectilinearEmbedding
from tss_geo.errors import InputError, ParseError
from tss_geo.graphcore.geometry import (
    DiskRepresentation,
    GeoPoint,
    GridCoords,
    GridPoint,
    IntervalModel,
    format_rational,
    parse_rational,
)
from tss_geo.graphcore.graph import Graph, normalize_edge
from tss_geo.reduce.artifact import (
    BudgetRecord,
    ReductionArtifact,
    Role,
    RoleKind,
    SubdivisionPlan,
)
from tss_geo.reduce.cnf import CnfFormula
from tss_geo.tsscore.instance import ActivationTrace, TSSInstance


def _rational(value: Any) -> Fraction:
    try:
        return parse_rational(value)
    except InputError as exc:
        raise ValueError(str(exc)) from exc


RationalText = Annotated[
    Fraction,
    BeforeValidator(_rational),
    PlainSerializer(format_rational, return_type=str),
]
Pair = tuple[int, int]

ModelT = TypeVar("ModelT", bound=BaseModel)


class _Wire(BaseModel):
    model_config = ConfigDict(extra="forbid")


class GraphModel(_Wire):
    n: int = Field(ge=0)
    edges: list[Pair] = Field(default_factory=list)

    def to_domain(self) -> Graph:
        return Graph(self.n, self.edges)

    @classmethod
    def from_domain(cls, g: Graph) -> "GraphModel":
        return cls(n=g.n, edges=list(g.sorted_edges))


class InstanceModel(_Wire):
    """A TSS instance; missing thresholds mean unanimous.

    ``intervals`` or ``coords`` may carry a certificate for the polynomial
    solvers.
    """

    graph: GraphModel
    thresholds: list[int] | None = None
    k: int = Field(default=0, ge=0)
    intervals: list[tuple[RationalText, RationalText]] | None = None
    coords: list[Pair] | None = None

    def to_domain(self) -> TSSInstance:
        g = self.graph.to_domain()
        if self.thresholds is None:
            return TSSInstance.unanimous(g, self.k)
        return TSSInstance.build(g, self.thresholds, self.k)

    def certificate(self) -> IntervalModel | GridCoords | None:
        if self.intervals is not None and self.coords is not None:
            raise InputError("give either intervals or coords, not both")
        if self.intervals is not None:
            return IntervalModel(tuple(self.intervals))
        if self.coords is not None:
            return coords_from_pairs(self.coords)
        return None

    @classmethod
    def from_domain(
        cls,
        inst: TSSInstance,
        *,
        coords: GridCoords | None = None,
        intervals: IntervalModel | None = None,
    ) -> "InstanceModel":
        return cls(
            graph=GraphModel.from_domain(inst.graph),
            thresholds=list(inst.thresholds),
            k=inst.budget,
            coords=[(p.x, p.y) for p in coords.coord] if coords else None,
            intervals=list(intervals.intervals) if intervals else None,
        )


def coords_from_pairs(pairs: list[Pair]) -> GridCoords:
    return GridCoords(tuple(GridPoint(x, y) for x, y in pairs))


class CoordsModel(RootModel[list[Pair]]):
    """A bare JSON list of [x, y] grid points, one per vertex."""

    def to_domain(self) -> GridCoords:
        return coords_from_pairs(self.root)

    @classmethod
    def from_domain(cls, coords: GridCoords) -> "CoordsModel":
        return cls([(p.x, p.y) for p in coords.coord])


class DisksModel(_Wire):
    diameter: RationalText
    centers: list[tuple[RationalText, RationalText]]

    def to_domain(self) -> DiskRepresentation:
        return DiskRepresentation(
            self.diameter, tuple(GeoPoint(x, y) for x, y in self.centers)
        )

    @classmethod
    def from_domain(cls, rep: DiskRepresentation) -> "DisksModel":
        return cls(
            diameter=rep.diameter, centers=[(c.x, c.y) for c in rep.centers]
        )


class EdgePathModel(_Wire):
    edge: Pair
    points: list[Pair]


class EmbeddingModel(_Wire):
    vpoint: list[Pair]
    epath: list[EdgePathModel]

    def to_domain(self) -> RectilinearEmbedding:
        epath: dict[Pair, tuple[GridPoint, ...]] = {}
        for item in self.epath:
            e = normalize_edge(*item.edge)
            if e in epath:
                raise InputError(f"edge {e} has two polylines")
            epath[e] = tuple(GridPoint(x, y) for x, y in item.points)
        return RectilinearEmbedding(
            tuple(GridPoint(x, y) for x, y in self.vpoint), epath
        )

    @classmethod
    def from_domain(cls, emb: RectilinearEmbedding) -> "EmbeddingModel":
        return cls(
            vpoint=[(p.x, p.y) for p in emb.vpoint],
            epath=[
                EdgePathModel(edge=e, points=[(p.x, p.y) for p in emb.epath[e]])
                for e in sorted(emb.epath)
            ],
        )


class FormulaModel(_Wire):
    num_vars: int = Field(ge=0)
    clauses: list[list[int]]

    def to_domain(self) -> CnfFormula:
        return CnfFormula.of(self.num_vars, self.clauses)

    @classmethod
    def from_domain(cls, f: CnfFormula) -> "FormulaModel":
        return cls(num_vars=f.num_vars, clauses=[list(c) for c in f.clauses])


class TraceModel(_Wire):
    rounds: list[list[int]]
    num_rounds: int
    final: list[int]
    complete: bool

    @classmethod
    def from_domain(cls, trace: ActivationTrace, n: int) -> "TraceModel":
        return cls(
            rounds=[sorted(s) for s in trace.rounds],
            num_rounds=trace.num_rounds,
            final=sorted(trace.final),
            complete=len(trace.final) == n,
        )


class SolveOutput(_Wire):
    k_min: int | None
    witness: list[int]
    method: str
    feasible: bool = True


class RoleModel(_Wire):
    vertex: int
    role: RoleKind
    ref: list[int] = Field(default_factory=list)
    name: str = ""

    def to_domain(self) -> Role:
        return Role(self.role, tuple(self.ref), self.name)


class PlanModel(_Wire):
    edge: Pair
    g: int
    w: list[int]
    q_e: int
    y_e: int


class BudgetModel(_Wire):
    formula: str
    terms: dict[str, int]
    value: int


class SourceModel(_Wire):
    kind: Literal["formula", "instance", "graph"]
    formula: FormulaModel | None = None
    instance: InstanceModel | None = None
    graph: GraphModel | None = None

    def to_domain(self) -> CnfFormula | TSSInstance | Graph:
        if self.kind == "formula" and self.formula is not None:
            return self.formula.to_domain()
        if self.kind == "instance" and self.instance is not None:
            return self.instance.to_domain()
        if self.kind == "graph" and self.graph is not None:
            return self.graph.to_domain()
        raise InputError(f"source of kind {self.kind!r} has no payload")

    @classmethod
    def from_domain(cls, source: Any) -> "SourceModel | None":
        if isinstance(source, CnfFormula):
            return cls(kind="formula", formula=FormulaModel.from_domain(source))
        if isinstance(source, TSSInstance):
            return cls(kind="instance", instance=InstanceModel.from_domain(source))
        if isinstance(source, Graph):
            return cls(kind="graph", graph=GraphModel.from_domain(source))
        return None


class ArtifactModel(_Wire):
    reduction: str
    instance: InstanceModel | None = None
    graph: GraphModel | None = None
    k: int
    provenance: list[RoleModel]
    counters: dict[str, int] = Field(default_factory=dict)
    budget: BudgetModel
    plans: list[PlanModel] = Field(default_factory=list)
    disks: DisksModel | None = None
    coords: list[Pair] | None = None
    source: SourceModel | None = None
    notes: list[str] = Field(default_factory=list)

    def to_domain(self) -> ReductionArtifact:
        if self.instance is not None:
            inst: TSSInstance | None = self.instance.to_domain()
            g = inst.graph
        elif self.graph is not None:
            inst = None
            g = self.graph.to_domain()
        else:
            raise InputError("artifact carries neither instance nor graph")
        roles = sorted(self.provenance, key=lambda r: r.vertex)
        if [r.vertex for r in roles] != list(range(g.n)):
            raise InputError("provenance must list every vertex once")
        return ReductionArtifact(
            reduction=self.reduction,
            graph=g,
            k=self.k,
            provenance=tuple(r.to_domain() for r in roles),
            budget=BudgetRecord(self.budget.formula, tuple(self.budget.terms.items())),
            instance=inst,
            counters=dict(self.counters),
            plans={
                p.edge: SubdivisionPlan(p.g, tuple(p.w), p.q_e, p.y_e)
                for p in self.plans
            },
            disks=self.disks.to_domain() if self.disks else None,
            coords=coords_from_pairs(self.coords) if self.coords else None,
            source=self.source.to_domain() if self.source else None,
            notes=list(self.notes),
        )

    @classmethod
    def from_domain(cls, art: ReductionArtifact) -> "ArtifactModel":
        return cls(
            reduction=art.reduction,
            instance=InstanceModel.from_domain(art.instance) if art.instance else None,
            graph=None if art.instance else GraphModel.from_domain(art.graph),
            k=art.k,
            provenance=[
                RoleModel(vertex=v, role=r.kind, ref=list(r.ref), name=r.name)
                for v, r in enumerate(art.provenance)
            ],
            counters=dict(art.counters),
            budget=BudgetModel(
                formula=art.budget.formula,
                terms=dict(art.budget.terms),
                value=art.budget.value,
            ),
            plans=[
                PlanModel(edge=e, g=p.g, w=list(p.w), q_e=p.q_e, y_e=p.y_e)
                for e, p in sorted(art.plans.items())
            ],
            disks=DisksModel.from_domain(art.disks) if art.disks else None,
            coords=[(p.x, p.y) for p in art.coords.coord] if art.coords else None,
            source=SourceModel.from_domain(art.source),
            notes=list(art.notes),
        )


def parse_model(text: str, model: type[ModelT], *, origin: str = "<input>") -> ModelT:
    """Validate JSON text against a wire model.

    Raises:
        ParseError: on invalid JSON or a schema mismatch; ``details`` holds the
            line (for JSON syntax errors) or the failing locations.
    """
    try:
        payload = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(
            f"{origin}: invalid JSON: {exc.msg}", details={"line": exc.lineno}
        ) from exc
    return load_payload(payload, model, origin=origin)


def load_payload(
    payload: Any, model: type[ModelT], *, origin: str = "<input>"
) -> ModelT:
    """Validate already-decoded JSON (e.g. a repro file section).

    Raises:
        ParseError: on a schema mismatch.
    """
    try:
        return model.model_validate(payload)
    except PydanticValidationError as exc:
        errors = [
            {"loc": list(err["loc"]), "msg": err["msg"]} for err in exc.errors()
        ]
        raise ParseError(
            f"{origin}: does not match {model.__name__}",
            details={"errors": errors},
        ) from exc


def load_model(path: Path, model: type[ModelT]) -> ModelT:
    """Read and validate a JSON file.

    Raises:
        InputError: if the file cannot be read.
        ParseError: if its content is not a valid ``model``.
    """
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from exc
    return parse_model(text, model, origin=str(path))


def dump_model(model: BaseModel) -> str:
    return model.model_dump_json(indent=2, exclude_none=True) + "\n"
