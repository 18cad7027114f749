"""Truthfulness audits, approximation ratios, sweeps and reference fixtures."""

from app.services.analysis.audit import (
    AuditMode,
    AuditStatus,
    AuditVerdict,
    ViolationWitness,
    all_partition_tapes,
    audit_deterministic,
    audit_expectation_2x2,
    audit_universal,
    expected_utility,
    replay_witness,
)
from app.services.analysis.deviations import DeviationSet
from app.services.analysis.families import (
    flat_unit_family,
    monotone_vectors,
    multi_unit_grid,
    random_markets,
    two_by_two_grid,
)
from app.services.analysis.fixtures import FIXTURES, FixtureResult, reference_fixtures
from app.services.analysis.ratios import SweepResult, SweepRow, ratio, worst_case_sweep

__all__ = [
    "AuditMode",
    "AuditStatus",
    "AuditVerdict",
    "DeviationSet",
    "FIXTURES",
    "FixtureResult",
    "SweepResult",
    "SweepRow",
    "ViolationWitness",
    "all_partition_tapes",
    "audit_deterministic",
    "audit_expectation_2x2",
    "audit_universal",
    "expected_utility",
    "flat_unit_family",
    "monotone_vectors",
    "multi_unit_grid",
    "random_markets",
    "ratio",
    "reference_fixtures",
    "replay_witness",
    "two_by_two_grid",
    "worst_case_sweep",
]
