"""Report models and their csv/json/text renderings.

Every report exposes ``to_dict()``, ``csv_rows()`` and ``text_lines()``;
:func:`render` picks one. Money appears twice: exact (``p/q`` or a finite
decimal) and rounded to the configured number of places.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Any, Dict, List, Optional, Protocol, Sequence, Tuple

from app.core.config import get_config
from app.services.analysis.audit import AuditVerdict
from app.services.analysis.fixtures import FixtureResult
from app.services.analysis.ratios import SweepResult
from app.services.mechanisms.models import TraceRecord
from common.money import ExtendedMoney, format_decimal, format_exact
from common.outcome import Outcome

Rows = Tuple[Sequence[str], List[Sequence[Any]]]


class ReportFormat(str, Enum):
    CSV = "csv"
    JSON = "json"
    TEXT = "text"


class Report(Protocol):
    def to_dict(self) -> Dict[str, Any]: ...

    def csv_rows(self) -> Rows: ...

    def text_lines(self) -> List[str]: ...


def money_pair(value: ExtendedMoney) -> Dict[str, str]:
    places = get_config().DECIMAL_PLACES
    if isinstance(value, Fraction):
        return {"exact": format_exact(value), "decimal": format_decimal(value, places)}
    return {"exact": format_decimal(value, places), "decimal": format_decimal(value, places)}


def _decimal(value: ExtendedMoney) -> str:
    return format_decimal(value, get_config().DECIMAL_PLACES)


@dataclass(frozen=True)
class RunReport:
    mechanism: str
    scenario_digest: str
    seed: int
    epsilon: Optional[Fraction]
    outcome: Outcome
    revenue: Fraction
    optimum: Fraction
    ratio: Fraction
    trace: Tuple[TraceRecord, ...]

    def to_dict(self) -> Dict[str, Any]:
        return {
            "mechanism": self.mechanism,
            "scenario_digest": self.scenario_digest,
            "seed": self.seed,
            "epsilon": format_exact(self.epsilon) if self.epsilon is not None else None,
            **self.outcome.to_dict(),
            "revenue": money_pair(self.revenue),
            "optimum": money_pair(self.optimum),
            "ratio": money_pair(self.ratio),
            "trace": [record.to_dict() for record in self.trace],
        }

    def csv_rows(self) -> Rows:
        space = self.outcome.allocation.space
        header = ("bidder", "bundle", "payment", "payment_decimal")
        rows: List[Sequence[Any]] = [
            (index, space.label(bundle), format_exact(payment), _decimal(payment))
            for index, (bundle, payment) in enumerate(zip(self.outcome.bundles, self.outcome.payments))
        ]
        rows.append(("revenue", "", format_exact(self.revenue), _decimal(self.revenue)))
        rows.append(("optimum", "", format_exact(self.optimum), _decimal(self.optimum)))
        rows.append(("ratio", "", format_exact(self.ratio), _decimal(self.ratio)))
        return header, rows

    def text_lines(self) -> List[str]:
        lines = [
            f"mechanism: {self.mechanism}",
            f"scenario:  {self.scenario_digest}",
            f"seed:      {self.seed}",
            f"allocation {self.outcome.allocation.label()}",
            "payments   (" + ", ".join(format_exact(payment) for payment in self.outcome.payments) + ")",
            f"revenue    {format_exact(self.revenue)} ({_decimal(self.revenue)})",
            f"optimum    {format_exact(self.optimum)} ({_decimal(self.optimum)})",
            f"ratio      {format_exact(self.ratio)} ({_decimal(self.ratio)})",
        ]
        lines.extend(f"  - {json.dumps(record.to_dict(), sort_keys=True)}" for record in self.trace)
        return lines


@dataclass(frozen=True)
class AuditReport:
    verdict: AuditVerdict
    scenario_digest: str

    def to_dict(self) -> Dict[str, Any]:
        return {"scenario_digest": self.scenario_digest, **self.verdict.to_dict()}

    def csv_rows(self) -> Rows:
        header = ("mechanism", "mode", "status", "checked", "bidder", "misreport", "truthful_utility", "deviating_utility")
        witness = self.verdict.witness
        detail: Sequence[Any] = ("", "", "", "")
        if witness is not None:
            detail = (
                witness.bidder,
                witness.misreport.describe(),
                _decimal(witness.truthful_utility),
                _decimal(witness.deviating_utility),
            )
        return header, [(self.verdict.mechanism, self.verdict.mode.value, self.verdict.status.value, self.verdict.checked, *detail)]

    def text_lines(self) -> List[str]:
        verdict = self.verdict
        lines = [f"{verdict.mechanism} [{verdict.mode.value}]: {verdict.status.value} after {verdict.checked} deviations"]
        if verdict.witness is not None:
            witness = verdict.witness
            lines.append(f"bidder {witness.bidder}: truth {witness.truth.describe()} -> report {witness.misreport.describe()}")
            lines.append(f"utility {_decimal(witness.truthful_utility)} -> {_decimal(witness.deviating_utility)}")
        return lines


@dataclass(frozen=True)
class SweepReport:
    result: SweepResult

    def to_dict(self) -> Dict[str, Any]:
        return {
            "mechanism": self.result.mechanism,
            "instances": len(self.result.rows),
            "min_ratio": money_pair(self.result.min_ratio),
            "witness_index": self.result.witness_index,
            "witness": self.result.witness.to_dict(),
            "rows": [row.to_dict() for row in self.result.rows],
        }

    def csv_rows(self) -> Rows:
        header = ("instance", "market", "ratio", "ratio_decimal")
        rows: List[Sequence[Any]] = [
            (row.index, row.market.describe(), format_exact(row.ratio), _decimal(row.ratio)) for row in self.result.rows
        ]
        rows.append(("min", self.result.witness.describe(), format_exact(self.result.min_ratio), _decimal(self.result.min_ratio)))
        return header, rows

    def text_lines(self) -> List[str]:
        result = self.result
        return [
            f"{result.mechanism}: {len(result.rows)} instances",
            f"min ratio {format_exact(result.min_ratio)} ({_decimal(result.min_ratio)}) at instance {result.witness_index}",
            f"witness {result.witness.describe()}",
        ]


@dataclass(frozen=True)
class FixtureReport:
    results: Tuple[FixtureResult, ...]

    @property
    def passed(self) -> bool:
        return all(result.passed for result in self.results)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "passed": self.passed,
            "fixtures": [
                {
                    "name": result.name,
                    "anchor": result.anchor,
                    "expected": result.expected,
                    "observed": result.observed,
                    "passed": result.passed,
                }
                for result in self.results
            ],
        }

    def csv_rows(self) -> Rows:
        header = ("fixture", "anchor", "expected", "observed", "status")
        return header, [
            (result.name, result.anchor, result.expected, result.observed, "pass" if result.passed else "FAIL")
            for result in self.results
        ]

    def text_lines(self) -> List[str]:
        width = max(len(result.name) for result in self.results)
        lines = [
            f"{'pass' if result.passed else 'FAIL'}  {result.name.ljust(width)}  {result.observed}" for result in self.results
        ]
        failed = sum(not result.passed for result in self.results)
        lines.append(f"{len(self.results) - failed}/{len(self.results)} fixtures passed")
        return lines


@dataclass(frozen=True)
class OracleReport:
    scenario_digest: str
    optimum: Fraction
    allocation: Sequence[Any]
    allocation_label: str
    fractional: Fraction

    def to_dict(self) -> Dict[str, Any]:
        return {
            "scenario_digest": self.scenario_digest,
            "optimal_revenue": money_pair(self.optimum),
            "allocation": list(self.allocation),
            "fractional_opt": money_pair(self.fractional),
        }

    def csv_rows(self) -> Rows:
        header = ("quantity", "exact", "decimal", "allocation")
        return header, [
            ("optimal_revenue", format_exact(self.optimum), _decimal(self.optimum), self.allocation_label),
            ("fractional_opt", format_exact(self.fractional), _decimal(self.fractional), ""),
        ]

    def text_lines(self) -> List[str]:
        return [
            f"optimal revenue {format_exact(self.optimum)} ({_decimal(self.optimum)}) via {self.allocation_label}",
            f"fractional opt  {format_exact(self.fractional)} ({_decimal(self.fractional)})",
        ]


def render(report: Report, fmt: ReportFormat | str) -> str:
    fmt = ReportFormat(fmt)
    if fmt is ReportFormat.JSON:
        return json.dumps(report.to_dict(), indent=2, sort_keys=True) + "\n"
    if fmt is ReportFormat.CSV:
        header, rows = report.csv_rows()
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(header)
        writer.writerows(rows)
        return buffer.getvalue()
    return "\n".join(report.text_lines()) + "\n"


__all__ = [
    "AuditReport",
    "FixtureReport",
    "OracleReport",
    "ReportFormat",
    "RunReport",
    "SweepReport",
    "money_pair",
    "render",
]
