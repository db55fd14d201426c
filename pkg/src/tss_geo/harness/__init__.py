"""Verification campaigns, equivalence checks and instance generators."""

from tss_geo.harness.campaigns import (
    case_seed,
    replay,
    run_case,
    verify_equivalence,
    verify_gadgets,
    verify_mod6,
)
from tss_geo.harness.checks import (
    CHECK_IDS,
    CheckContext,
    EquivalenceCheck,
    create_check,
)
from tss_geo.harness.report import CaseFailure, VerificationReport

__all__ = [
    "CHECK_IDS",
    "CaseFailure",
    "CheckContext",
    "EquivalenceCheck",
    "VerificationReport",
    "case_seed",
    "create_check",
    "replay",
    "run_case",
    "verify_equivalence",
    "verify_gadgets",
    "verify_mod6",
]
