"""Reduction registry: one adapter class per reduction id."""

from abc import ABC, abstractmethod
from collections.abc import Iterable
from dataclasses import dataclass

from tss_geo.embed.embedding import RectilinearEmbedding
from tss_geo.embed.router import compute_embedding
from tss_geo.errors import InputError
from tss_geo.graphcore.geometry import GridCoords
from tss_geo.graphcore.graph import Graph
from tss_geo.reduce.artifact import ReductionArtifact
from tss_geo.reduce.cnf import Assignment, CnfFormula
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
)
from tss_geo.tsscore.instance import TSSInstance

Witness = Assignment | set[int]


@dataclass(slots=True)
class ReductionInput:
    """Source material for a reduction; each reduction reads its own fields."""

    formula: CnfFormula | None = None
    instance: TSSInstance | None = None
    graph: Graph | None = None
    embedding: RectilinearEmbedding | None = None
    coords: GridCoords | None = None
    r: int | None = None
    k: int = 0
    embed_seed: int = 0
    embed_attempts: int = 24

    def need_formula(self) -> CnfFormula:
        if self.formula is None:
            raise InputError("this reduction needs a CNF formula")
        return self.formula

    def need_instance(self) -> TSSInstance:
        if self.instance is None:
            raise InputError("this reduction needs a TSS instance")
        return self.instance

    def need_coords(self) -> GridCoords:
        if self.coords is None:
            raise InputError("this reduction needs grid coordinates")
        return self.coords

    def embedding_for(self, g: Graph) -> RectilinearEmbedding:
        if self.embedding is not None:
            return self.embedding
        return compute_embedding(
            g, seed=self.embed_seed, attempts=self.embed_attempts
        )


def _as_set(witness: Witness) -> set[int]:
    if isinstance(witness, Assignment):
        raise InputError("expected a vertex set, got an assignment")
    return set(witness)


def _as_assignment(witness: Witness) -> Assignment:
    if not isinstance(witness, Assignment):
        raise InputError("expected an assignment, got a vertex set")
    return witness


class Reduction(ABC):
    """A constructive reduction with its two witness translations."""

    @property
    @abstractmethod
    def name(self) -> str:
        """Registry id."""

    @property
    @abstractmethod
    def requires(self) -> tuple[str, ...]:
        """ReductionInput fields that must be present."""

    @abstractmethod
    def apply(self, source: ReductionInput) -> ReductionArtifact:
        """Build the output artifact."""

    @abstractmethod
    def lift(self, art: ReductionArtifact, witness: Witness) -> set[int]:
        """Source witness -> output witness."""

    @abstractmethod
    def project(self, art: ReductionArtifact, witness: Iterable[int]) -> Witness:
        """Output witness -> source witness."""


class SatToTSS(Reduction):
    name = "sat2tss"
    requires = ("formula",)

    def apply(self, source: ReductionInput) -> ReductionArtifact:
        return sat_to_planar_tss(source.need_formula())

    def lift(self, art: ReductionArtifact, witness: Witness) -> set[int]:
        return assignment_to_target_set(art, _as_assignment(witness))

    def project(self, art: ReductionArtifact, witness: Iterable[int]) -> Witness:
        return target_set_to_assignment(art, witness)


class SatToMajority(Reduction):
    name = "sat2majority"
    requires = ("formula",)

    def apply(self, source: ReductionInput) -> ReductionArtifact:
        return sat_to_planar_majority_tss(source.need_formula())

    def lift(self, art: ReductionArtifact, witness: Witness) -> set[int]:
        return assignment_to_majority_target_set(art, _as_assignment(witness))

    def project(self, art: ReductionArtifact, witness: Iterable[int]) -> Witness:
        return majority_target_set_to_assignment(art, witness)


class PlanarToGrid(Reduction):
    name = "planar2grid"
    requires = ("instance",)

    def apply(self, source: ReductionInput) -> ReductionArtifact:
        inst = source.need_instance()
        return planar_tss_to_grid_tss(inst, source.embedding_for(inst.graph))

    def lift(self, art: ReductionArtifact, witness: Witness) -> set[int]:
        return grid_lift_witness(art, _as_set(witness))

    def project(self, art: ReductionArtifact, witness: Iterable[int]) -> Witness:
        return grid_project_witness(art, witness)


class MajorityTransform(Reduction):
    name = "majority"
    requires = ("instance",)

    def apply(self, source: ReductionInput) -> ReductionArtifact:
        return majority_transform(source.need_instance())

    def lift(self, art: ReductionArtifact, witness: Witness) -> set[int]:
        return majority_lift_witness(art, _as_set(witness))

    def project(self, art: ReductionArtifact, witness: Iterable[int]) -> Witness:
        return majority_project_witness(art, witness)


class IsToUdg(Reduction):
    name = "is2udg"
    requires = ("graph",)

    def apply(self, source: ReductionInput) -> ReductionArtifact:
        if source.graph is None:
            raise InputError("this reduction needs a graph")
        g = source.graph
        r = source.r if source.r is not None else g.max_degree
        return is_planar_to_is_udg(g, r, source.embedding_for(g), source.k)

    def lift(self, art: ReductionArtifact, witness: Witness) -> set[int]:
        return is_lift_witness(art, _as_set(witness))

    def project(self, art: ReductionArtifact, witness: Iterable[int]) -> Witness:
        return is_project_witness(art, witness)


class GridToExact2(Reduction):
    name = "grid2exact2"
    requires = ("instance", "coords")

    def apply(self, source: ReductionInput) -> ReductionArtifact:
        inst, coords = source.need_instance(), source.need_coords()
        return majority_grid_to_exact2_udg(inst, coords)

    def lift(self, art: ReductionArtifact, witness: Witness) -> set[int]:
        return exact2_lift_witness(art, _as_set(witness))

    def project(self, art: ReductionArtifact, witness: Iterable[int]) -> Witness:
        return exact2_project_witness(art, witness)


_REGISTRY: dict[str, type[Reduction]] = {
    "sat2tss": SatToTSS,
    "sat2majority": SatToMajority,
    "planar2grid": PlanarToGrid,
    "majority": MajorityTransform,
    "is2udg": IsToUdg,
    "grid2exact2": GridToExact2,
}

REDUCTION_IDS = tuple(_REGISTRY)


def create_reduction(reduction_id: str) -> Reduction:
    """Instantiate a registered reduction.

    Raises:
        ValueError: if the id is unknown.
    """
    cls = _REGISTRY.get(reduction_id)
    if cls is None:
        raise ValueError(f"Unsupported reduction: {reduction_id}")
    return cls()
