"""Threshold taxonomy: unanimous, majority, constant-bounded, exact."""

from dataclasses import dataclass
from typing import Literal

from tss_geo.tsscore.instance import TSSInstance

ThresholdTag = Literal["unanimous", "majority", "constant_bounded", "exact", "general"]


@dataclass(frozen=True, slots=True, order=True)
class ThresholdClass:
    tag: ThresholdTag
    c: int | None = None

    def __str__(self) -> str:
        return self.tag if self.c is None else f"{self.tag}({self.c})"


UNANIMOUS = ThresholdClass("unanimous")
MAJORITY = ThresholdClass("majority")
GENERAL = ThresholdClass("general")


def majority_threshold(degree: int) -> int:
    """⌈deg/2⌉."""
    return (degree + 1) // 2


def is_unanimous(inst: TSSInstance) -> bool:
    return inst.thresholds == inst.graph.degrees


def is_majority(inst: TSSInstance) -> bool:
    return all(
        t == majority_threshold(d)
        for t, d in zip(inst.thresholds, inst.graph.degrees, strict=True)
    )


def classify_thresholds(inst: TSSInstance) -> frozenset[ThresholdClass]:
    """Every class the threshold map satisfies; ``general`` is always present."""
    classes = {GENERAL}
    if is_unanimous(inst):
        classes.add(UNANIMOUS)
    if is_majority(inst):
        classes.add(MAJORITY)
    c = max(inst.thresholds, default=0)
    classes.add(ThresholdClass("constant_bounded", c))
    if inst.n > 0 and all(t == c for t in inst.thresholds):
        classes.add(ThresholdClass("exact", c))
    return frozenset(classes)
