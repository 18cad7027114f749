"""Monotone greedy auction for single-parameter bidders."""

from __future__ import annotations

import logging
from typing import List

from app.services.oracles.capacity import ensure_capacity
from common.errors import ContractError
from common.market import Market
from common.money import ZERO, format_exact

from .models import MechanismResult, Trace, settle

logger = logging.getLogger(__name__)

MECHANISM_ID = "sp-greedy"


def single_parameter_greedy(market: Market) -> MechanismResult:
    """Serve bidders by descending value, each taking its first desired bundle that still fits.

    Every bidder must be single-valued: all positive atoms share one value
    (single-minded bidders are the one-atom case). A bidder reporting nothing
    never wins. Raising a value only moves a bidder earlier, so the rule is
    monotone and winners pay their bid.
    """
    space = ensure_capacity(market.items)
    for index, valuation in enumerate(market.valuations):
        if valuation.positive_atoms() and not valuation.is_single_valued:
            raise ContractError(f"bidder {index} is not single-valued: {valuation.describe()}")

    def bid(index: int):
        atoms = market.valuations[index].positive_atoms()
        return atoms[0][1] if atoms else ZERO

    order = sorted(range(market.n), key=lambda index: (-bid(index), index))
    bundles: List[int] = [0] * market.n
    trace = Trace()
    for index in order:
        for bundle, _ in market.valuations[index].positive_atoms():
            if space.fits_together(bundles + [bundle]):
                bundles[index] = bundle
                trace.add("accept", bidder=index, bundle=space.to_json(bundle), bid=format_exact(bid(index)))
                break
        else:
            if bid(index) > 0:
                trace.add("reject", bidder=index, bid=format_exact(bid(index)))
    logger.debug("sp-greedy order %s -> %s", order, bundles)
    return MechanismResult(MECHANISM_ID, settle(market, bundles), trace.freeze())


__all__ = ["single_parameter_greedy"]
