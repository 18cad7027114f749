"""Revenue-maximising allocation with pay-as-bid payments (not truthful)."""

from __future__ import annotations

from app.services.oracles.winner_determination import optimal_revenue
from common.market import Market
from common.money import format_exact

from .models import MechanismResult, Trace, settle

MECHANISM_ID = "revmax"


def revenue_max_payasbid(market: Market) -> MechanismResult:
    solution = optimal_revenue(market)
    trace = Trace()
    trace.add("optimum", value=format_exact(solution.value), allocation=solution.allocation.to_json())
    return MechanismResult(MECHANISM_ID, settle(market, solution.allocation.bundles), trace.freeze())


__all__ = ["revenue_max_payasbid"]
