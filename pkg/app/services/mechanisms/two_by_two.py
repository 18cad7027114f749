"""Mechanisms for two bidders and two identical units.

The deterministic golden-ratio mechanism relies on a public strongest bidder;
the randomized one splits the units with probability ``v_weak(1) / v_strong(2)``
and is truthful in expectation.
"""

from __future__ import annotations

import logging
from fractions import Fraction
from typing import Optional, Tuple

from app.core.config import get_config
from common.errors import PreconditionError
from common.market import Market
from common.money import ONE, ZERO, exceeds_golden_share, format_exact
from common.outcome import Outcome, revenue
from common.tape import RandomTape

from .models import MechanismResult, Trace, require_multi_unit, settle

logger = logging.getLogger(__name__)

GOLDEN_ID = "golden"
RANDOMIZED_ID = "rand2x2"

SPLIT = (1, 1)


def _both_units(bidder: int) -> Tuple[int, int]:
    return (2, 0) if bidder == 0 else (0, 2)


def golden_case(market: Market) -> str:
    """Which branch of the golden-ratio mechanism applies; public knowledge under PSB."""
    require_multi_unit(market, 2, 2, GOLDEN_ID)
    if market.psb is None:
        raise PreconditionError("golden needs a public strongest bidder (psb)")
    strong = market.valuations[market.psb].value_query(2)
    weak = market.valuations[1 - market.psb].value_query(2)
    return "tie" if strong == weak else "strict"


def golden_ratio(market: Market, tape: Optional[RandomTape] = None) -> MechanismResult:
    """Deterministic 2x2 mechanism under a public strongest bidder.

    Strictly strongest bidder: split iff the weak bidder's one-unit value
    exceeds r times the strong two-unit value, else the strong bidder takes
    both. Two-unit tie: split iff some bidder values one unit above r times
    two units, else one tape draw picks who takes both (u < 1/2 picks bidder 0).
    """
    require_multi_unit(market, 2, 2, GOLDEN_ID)
    if market.psb is None:
        raise PreconditionError("golden needs a public strongest bidder (psb)")
    strong = market.psb
    weak = 1 - strong
    values = [valuation.unit_values() for valuation in market.valuations]
    trace = Trace()

    if values[strong][1] > values[weak][1]:
        split = exceeds_golden_share(values[weak][0], values[strong][1])
        trace.add("strict-strongest", strong=strong, weak=weak, split=split)
        bundles = SPLIT if split else _both_units(strong)
    elif values[strong][1] == values[weak][1]:
        keen = [bidder for bidder in (0, 1) if exceeds_golden_share(values[bidder][0], values[bidder][1])]
        if keen:
            trace.add("tie-split", bidders=keen)
            bundles = SPLIT
        else:
            tape = tape if tape is not None else RandomTape(get_config().DEFAULT_SEED)
            draw = tape.draw()
            winner = 0 if draw < Fraction(1, 2) else 1
            trace.add("tie-draw", draw=str(draw), winner=winner)
            bundles = _both_units(winner)
    else:
        raise PreconditionError(f"bidder {strong} is not the strongest on two units")

    logger.debug("golden allocates %s", bundles)
    return MechanismResult(GOLDEN_ID, settle(market, bundles), trace.freeze())


def _strict_strong_bidder(market: Market) -> int:
    require_multi_unit(market, 2, 2, RANDOMIZED_ID)
    first, second = (valuation.value_query(2) for valuation in market.valuations)
    if first == second:
        raise PreconditionError(f"two-unit values tie at {format_exact(first)}; the split lottery is undefined")
    return 0 if first > second else 1


def split_probability(market: Market) -> Fraction:
    """``q = v_weak(1) / v_strong(2)`` for a strict two-unit leader."""
    strong = _strict_strong_bidder(market)
    weak = 1 - strong
    return market.valuations[weak].value_query(1) / market.valuations[strong].value_query(2)


def lottery_2x2(market: Market) -> Tuple[Tuple[Fraction, Outcome], ...]:
    """Outcomes of the randomized mechanism with their positive probabilities."""
    strong = _strict_strong_bidder(market)
    q = split_probability(market)
    branches = ((q, settle(market, SPLIT)), (ONE - q, settle(market, _both_units(strong))))
    return tuple((probability, outcome) for probability, outcome in branches if probability > 0)


def randomized_2x2(market: Market, tape: RandomTape) -> MechanismResult:
    strong = _strict_strong_bidder(market)
    q = split_probability(market)
    draw = tape.draw()
    bundles = SPLIT if draw < q else _both_units(strong)
    trace = Trace()
    trace.add("lottery", strong=strong, q=format_exact(q), draw=str(draw), split=draw < q)
    return MechanismResult(RANDOMIZED_ID, settle(market, bundles), trace.freeze())


def exact_expected_revenue(market: Market) -> Fraction:
    """``q (v_0(1) + v_1(1)) + (1 - q) v_strong(2)``, exactly."""
    return sum((probability * revenue(outcome) for probability, outcome in lottery_2x2(market)), ZERO)


__all__ = [
    "exact_expected_revenue",
    "golden_case",
    "golden_ratio",
    "lottery_2x2",
    "randomized_2x2",
    "split_probability",
]
