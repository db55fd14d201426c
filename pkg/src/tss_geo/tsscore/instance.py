"""TSS problem objects: (G, t, k) and activation traces."""

from collections.abc import Sequence
from dataclasses import dataclass
from typing import Any

from tss_geo.errors import InputError
from tss_geo.graphcore.graph import Graph

ThresholdMap = tuple[int, ...]


@dataclass(frozen=True, slots=True)
class TSSInstance:
    """A graph with one non-negative threshold per vertex and a budget k."""

    graph: Graph
    thresholds: ThresholdMap
    budget: int = 0

    def __post_init__(self) -> None:
        if len(self.thresholds) != self.graph.n:
            raise InputError(
                f"{len(self.thresholds)} thresholds for {self.graph.n} vertices"
            )
        for v, t in enumerate(self.thresholds):
            if t < 0:
                raise InputError(f"negative threshold {t} at vertex {v}")
        if self.budget < 0:
            raise InputError(f"budget must be >= 0, got {self.budget}")

    @classmethod
    def build(
        cls, graph: Graph, thresholds: Sequence[int], budget: int = 0
    ) -> "TSSInstance":
        return cls(graph, tuple(int(t) for t in thresholds), int(budget))

    @classmethod
    def unanimous(cls, graph: Graph, budget: int = 0) -> "TSSInstance":
        return cls(graph, graph.degrees, budget)

    @property
    def n(self) -> int:
        return self.graph.n

    def threshold(self, v: int) -> int:
        return self.thresholds[v]

    def to_dict(self) -> dict[str, Any]:
        return {
            "graph": self.graph.to_dict(),
            "thresholds": list(self.thresholds),
            "k": self.budget,
        }


@dataclass(frozen=True, slots=True)
class ActivationTrace:
    """Monotone infected sets S_0 <= S_1 <= ... <= S_r; S_r is the first fixed point."""

    rounds: tuple[frozenset[int], ...]

    @property
    def final(self) -> frozenset[int]:
        return self.rounds[-1]

    @property
    def num_rounds(self) -> int:
        """Number of productive rounds r."""
        return len(self.rounds) - 1

    def activation_round(self, v: int) -> int | None:
        """First round index in which ``v`` is infected, if ever."""
        for i, infected in enumerate(self.rounds):
            if v in infected:
                return i
        return None

    def to_dict(self) -> dict[str, Any]:
        return {"rounds": [sorted(s) for s in self.rounds]}
