"""Pareto-optimal greedy auction."""

from __future__ import annotations

import logging
from typing import List, Optional, Tuple

from app.services.oracles.capacity import ensure_capacity
from common.market import Market
from common.money import format_exact

from .models import MechanismResult, Trace, settle

logger = logging.getLogger(__name__)

MECHANISM_ID = "po"


def po_auction(market: Market) -> MechanismResult:
    """Repeatedly award the highest remaining (bidder, bundle) value at that price.

    Equal values go to the smaller bundle, then the lower bidder index, then
    the earlier bundle in item order. Stops once no positive value is left.
    """
    space = ensure_capacity(market.items)
    remaining = space.grand
    active = list(range(market.n))
    bundles: List[int] = [0] * market.n
    trace = Trace()

    while active and remaining:
        best: Optional[Tuple[tuple, int, int]] = None
        for bidder in active:
            valuation = market.valuations[bidder]
            for bundle, _ in valuation.positive_atoms():
                if not space.is_subset(bundle, remaining):
                    continue
                value = valuation.value_query(bundle)
                key = (-value, space.cardinality(bundle), bidder, space.order_key(bundle))
                if best is None or key < best[0]:
                    best = (key, bidder, bundle)
        if best is None:
            break
        _, bidder, bundle = best
        bundles[bidder] = bundle
        active.remove(bidder)
        remaining = space.remove(remaining, bundle)
        price = market.valuations[bidder].value_query(bundle)
        trace.add("award", bidder=bidder, bundle=space.to_json(bundle), price=format_exact(price))
        logger.debug("po awards %s to bidder %d at %s", space.label(bundle), bidder, format_exact(price))

    return MechanismResult(MECHANISM_ID, settle(market, bundles), trace.freeze())


__all__ = ["po_auction"]
