"""Result types and shared helpers for the auction mechanisms."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Dict, List, Sequence, Tuple

from common.errors import ContractError
from common.items import Bundle
from common.market import Market
from common.money import format_exact
from common.outcome import Outcome


@dataclass(frozen=True)
class TraceRecord:
    """One decision taken by a mechanism."""

    step: str
    detail: Dict[str, Any] = field(default_factory=dict)

    def to_dict(self) -> Dict[str, Any]:
        return {"step": self.step, **self.detail}


@dataclass(frozen=True)
class MechanismResult:
    mechanism: str
    outcome: Outcome
    trace: Tuple[TraceRecord, ...] = ()

    @property
    def revenue(self):
        return self.outcome.revenue

    def to_dict(self) -> Dict[str, Any]:
        return {
            "mechanism": self.mechanism,
            **self.outcome.to_dict(),
            "revenue": format_exact(self.revenue),
            "trace": [record.to_dict() for record in self.trace],
        }


class Trace:
    """Mutable collector turned into a tuple of records once a run ends."""

    def __init__(self) -> None:
        self._records: List[TraceRecord] = []

    def add(self, step: str, **detail: Any) -> None:
        self._records.append(TraceRecord(step, detail))

    def freeze(self) -> Tuple[TraceRecord, ...]:
        return tuple(self._records)


def settle(market: Market, bundles: Sequence[Bundle]) -> Outcome:
    """Pay-as-bid: every bidder is charged its report for the bundle it gets."""
    payments = [valuation.value_query(bundle) for valuation, bundle in zip(market.valuations, bundles)]
    return Outcome.build(market.items, bundles, payments)


def require_multi_unit(market: Market, bidders: int, units: int, mechanism: str) -> None:
    if not market.items.is_multi_unit or market.shape != (bidders, units):
        raise ContractError(
            f"{mechanism} needs {bidders} bidders and {units} identical units, got "
            f"{market.n} bidders over {market.items.describe()}"
        )


__all__ = ["MechanismResult", "Trace", "TraceRecord", "require_multi_unit", "settle"]
