"""Scenario parsing and report serialization."""

from app.schemas.report import (
    AuditReport,
    FixtureReport,
    OracleReport,
    ReportFormat,
    RunReport,
    SweepReport,
    render,
)
from app.schemas.scenario import Scenario, canonical_json, parse_scenario, scenario_digest, witness_scenario

__all__ = [
    "AuditReport",
    "FixtureReport",
    "OracleReport",
    "ReportFormat",
    "RunReport",
    "Scenario",
    "SweepReport",
    "canonical_json",
    "parse_scenario",
    "render",
    "scenario_digest",
    "witness_scenario",
]
