"""Grand bundle to the highest grand-bundle bid."""

from __future__ import annotations

from app.services.oracles.capacity import ensure_capacity
from common.market import Market
from common.money import format_exact

from .models import MechanismResult, Trace, settle

MECHANISM_ID = "strongest"


def strongest_bidder(market: Market) -> MechanismResult:
    space = ensure_capacity(market.items)
    winner = market.strongest_index()
    bid = market.valuations[winner].grand_value
    bundles = [0] * market.n
    trace = Trace()
    if bid > 0:
        bundles[winner] = space.grand
        trace.add("award", bidder=winner, bid=format_exact(bid))
    else:
        trace.add("no-bid")
    return MechanismResult(MECHANISM_ID, settle(market, bundles), trace.freeze())


__all__ = ["strongest_bidder"]
