"""Pareto-dominance check for value-bidder outcomes."""

from __future__ import annotations

import logging
from typing import Optional

from common.errors import PreconditionError
from common.market import Market
from common.money import ZERO
from common.outcome import Outcome, is_individually_rational, revenue

from .winner_determination import feasible_allocations

logger = logging.getLogger(__name__)


def pareto_dominated(outcome: Outcome, market: Market) -> Optional[Outcome]:
    """Return an outcome that Pareto-dominates ``outcome``, or ``None``.

    Candidates charge every bidder its full value for the new bundle; any
    dominating outcome can be raised to those payments without hurting a
    bidder, so the search loses nothing by fixing them.
    """
    if outcome.allocation.space != market.items or len(outcome.payments) != market.n:
        raise PreconditionError("outcome does not belong to this market")
    if not is_individually_rational(outcome, market):
        raise PreconditionError("only individually rational outcomes can be audited for Pareto dominance")

    current = [valuation.value_query(bundle) for valuation, bundle in zip(market.valuations, outcome.bundles)]
    seller = revenue(outcome)
    for bundles in feasible_allocations(market.items, market.n):
        values = [valuation.value_query(bundle) for valuation, bundle in zip(market.valuations, bundles)]
        if any(new < old for new, old in zip(values, current)):
            continue
        proposed = sum(values, ZERO)
        if proposed < seller:
            continue
        if proposed > seller or any(new > old for new, old in zip(values, current)):
            witness = Outcome.build(market.items, bundles, values)
            logger.debug("outcome %s dominated by %s", outcome.allocation.label(), witness.allocation.label())
            return witness
    return None


__all__ = ["pareto_dominated"]
