"""TSS instances, the activation process, preprocessing and the exact oracle."""

from tss_geo.tsscore.activation import closure_mask, is_target_set, simulate
from tss_geo.tsscore.instance import ActivationTrace, ThresholdMap, TSSInstance
from tss_geo.tsscore.oracle import (
    TargetSetOptimum,
    min_target_set_bruteforce,
    min_target_set_small_thresholds,
)
from tss_geo.tsscore.preprocess import (
    PreprocessResult,
    normalize_seed,
    preprocess_cap_thresholds,
)
from tss_geo.tsscore.thresholds import (
    GENERAL,
    MAJORITY,
    UNANIMOUS,
    ThresholdClass,
    classify_thresholds,
    is_majority,
    is_unanimous,
    majority_threshold,
)

__all__ = [
    "GENERAL",
    "MAJORITY",
    "UNANIMOUS",
    "ActivationTrace",
    "PreprocessResult",
    "TSSInstance",
    "TargetSetOptimum",
    "ThresholdClass",
    "ThresholdMap",
    "classify_thresholds",
    "closure_mask",
    "is_majority",
    "is_target_set",
    "is_unanimous",
    "majority_threshold",
    "min_target_set_bruteforce",
    "min_target_set_small_thresholds",
    "normalize_seed",
    "preprocess_cap_thresholds",
    "simulate",
]
