"""Reduction artifacts: output instance, provenance and budget bookkeeping."""

from dataclasses import dataclass, field
from typing import Any, Literal

from tss_geo.graphcore.geometry import DiskRepresentation, GridCoords
from tss_geo.graphcore.graph import Edge, Graph
from tss_geo.tsscore.instance import TSSInstance

RoleKind = Literal[
    "original",
    "subdivision",
    "clique_copy",
    "gadget",
    "clause",
    "cherry",
    "leaf",
    "embed_point",
]

GADGET_NAMES = ("T", "F", "t", "f", "a", "b", "c", "d", "p1", "p2", "p3")
CHERRY_POSITIONS = ("l", "m", "r")


@dataclass(frozen=True, slots=True, order=True)
class Role:
    """Where an output vertex comes from.

    ``ref`` holds the integer coordinates of the role (source vertex, edge
    endpoints and position, variable or clause index, cherry index and host);
    ``name`` holds the gadget vertex name or cherry position.
    """

    kind: RoleKind
    ref: tuple[int, ...] = ()
    name: str = ""

    @classmethod
    def original(cls, v: int) -> "Role":
        return cls("original", (v,))

    @classmethod
    def subdivision(cls, e: Edge, i: int) -> "Role":
        return cls("subdivision", (e[0], e[1], i))

    @classmethod
    def clique_copy(cls, e: Edge, i: int, c: int) -> "Role":
        return cls("clique_copy", (e[0], e[1], i, c))

    @classmethod
    def embed_point(cls, e: Edge, i: int) -> "Role":
        return cls("embed_point", (e[0], e[1], i))

    @classmethod
    def gadget(cls, var: int, name: str) -> "Role":
        if name not in GADGET_NAMES:
            raise ValueError(f"unknown gadget vertex {name!r}")
        return cls("gadget", (var,), name)

    @classmethod
    def clause(cls, j: int) -> "Role":
        return cls("clause", (j,))

    @classmethod
    def cherry(cls, index: int, host: int, pos: str) -> "Role":
        if pos not in CHERRY_POSITIONS:
            raise ValueError(f"unknown cherry position {pos!r}")
        return cls("cherry", (index, host), pos)

    @classmethod
    def leaf(cls, parent: int, i: int = 0) -> "Role":
        return cls("leaf", (parent, i))

    @property
    def edge(self) -> Edge:
        if self.kind not in ("subdivision", "clique_copy", "embed_point"):
            raise ValueError(f"{self.kind} role has no edge")
        return (self.ref[0], self.ref[1])

    def to_dict(self) -> dict[str, Any]:
        payload: dict[str, Any] = {"role": self.kind, "ref": list(self.ref)}
        if self.name:
            payload["name"] = self.name
        return payload


@dataclass(frozen=True, slots=True)
class SubdivisionPlan:
    """Per-edge chain plan of the disk reduction: y_e = g - 2 + sum(w) = 6 q_e."""

    g: int
    w: tuple[int, ...]
    q_e: int
    y_e: int

    def __post_init__(self) -> None:
        if self.g < 2 or len(self.w) != self.g - 1:
            raise ValueError(f"plan needs g >= 2 and g - 1 weights, got {self}")
        if any(x not in (6, 7, 8, 9) for x in self.w):
            raise ValueError(f"weights must lie in 6..9, got {self.w}")
        if self.y_e != self.g - 2 + sum(self.w):
            raise ValueError("y_e must equal g - 2 + sum(w)")
        if self.y_e % 6 or self.q_e * 6 != self.y_e:
            raise ValueError("y_e must equal 6 q_e")

    @classmethod
    def for_length(cls, g: int, w: tuple[int, ...]) -> "SubdivisionPlan":
        y_e = g - 2 + sum(w)
        return cls(g=g, w=w, q_e=y_e // 6, y_e=y_e)

    def to_dict(self) -> dict[str, Any]:
        return {"g": self.g, "w": list(self.w), "q_e": self.q_e, "y_e": self.y_e}


@dataclass(frozen=True, slots=True)
class BudgetRecord:
    """Output budget as a sum of named terms, e.g. k' = k + alpha."""

    formula: str
    terms: tuple[tuple[str, int], ...]

    @property
    def value(self) -> int:
        return sum(v for _, v in self.terms)

    def to_dict(self) -> dict[str, Any]:
        return {"formula": self.formula, "terms": dict(self.terms), "value": self.value}


@dataclass(slots=True)
class ReductionArtifact:
    """Everything a reduction emits.

    ``instance`` is set for TSS outputs; IS outputs carry only ``graph`` and
    ``k``. The recorded budget must equal its formula and provenance must
    name every output vertex exactly once; both are checked on construction.
    """

    reduction: str
    graph: Graph
    k: int
    provenance: tuple[Role, ...]
    budget: BudgetRecord
    instance: TSSInstance | None = None
    counters: dict[str, int] = field(default_factory=dict)
    plans: dict[Edge, SubdivisionPlan] = field(default_factory=dict)
    disks: DiskRepresentation | None = None
    coords: GridCoords | None = None
    source: Any = None
    notes: list[str] = field(default_factory=list)

    def __post_init__(self) -> None:
        if len(self.provenance) != self.graph.n:
            raise AssertionError(
                f"provenance covers {len(self.provenance)} of {self.graph.n} vertices"
            )
        if len(set(self.provenance)) != len(self.provenance):
            raise AssertionError("provenance is not injective")
        if self.budget.value != self.k:
            raise AssertionError(
                f"budget {self.k} disagrees with {self.budget.formula} "
                f"= {self.budget.value}"
            )
        if self.instance is not None and (
            self.instance.graph is not self.graph and self.instance.graph != self.graph
        ):
            raise AssertionError("instance graph differs from artifact graph")

    def vertices_of_kind(self, kind: RoleKind) -> list[int]:
        return [v for v, role in enumerate(self.provenance) if role.kind == kind]

    def require_instance(self) -> TSSInstance:
        if self.instance is None:
            raise ValueError(f"{self.reduction} artifact carries no TSS instance")
        return self.instance
