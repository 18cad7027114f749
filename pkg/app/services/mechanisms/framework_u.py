"""Random-sampling framework with a grand-bundle reserve and posted item prices.

Bidders are split into three groups. The statistics group only sets prices:
its fractional optimum ``OPT*`` gives a reserve ``OPT*/sqrt(m)`` for the grand
bundle group and a per-item price ``eps * OPT* / (8m)`` for the fixed-price
group, whose members then answer value-bidder demand queries in index order.
For a fixed tape the mechanism is deterministic, which is what universal
truthfulness is audited against.
"""

from __future__ import annotations

import logging
from fractions import Fraction
from typing import List, Optional, Tuple

from app.services.oracles.capacity import ensure_capacity
from app.services.oracles.fractional import fractional_value
from common.errors import ContractError
from common.items import Bundle, ItemSpace
from common.market import Market
from common.money import ONE, MoneyLike, format_exact, to_money
from common.outcome import Outcome
from common.tape import PartitionLabel, RandomTape
from common.valuation import Valuation

from .models import MechanismResult, Trace, settle

logger = logging.getLogger(__name__)

MECHANISM_ID = "framework-u"


def check_epsilon(epsilon: MoneyLike) -> Fraction:
    try:
        value = to_money(epsilon)
    except ValueError as exc:
        raise ContractError(f"epsilon: {exc}") from exc
    if not 0 < value < 1:
        raise ContractError(f"epsilon must lie strictly between 0 and 1, got {format_exact(value)}")
    return value


def draw_labels(market: Market, epsilon: Fraction, tape: RandomTape) -> Tuple[PartitionLabel, ...]:
    """Explicit tape labels, or one draw per bidder: 1-eps grand, eps/2 fixed, eps/2 stat."""
    explicit = tape.labels_for(market.n)
    if explicit is not None:
        return explicit
    labels = []
    for _ in range(market.n):
        draw = tape.draw()
        if draw < ONE - epsilon:
            labels.append(PartitionLabel.GRAND)
        elif draw < ONE - epsilon / 2:
            labels.append(PartitionLabel.FIXED)
        else:
            labels.append(PartitionLabel.STAT)
    return tuple(labels)


def demand_query(valuation: Valuation, remaining: Bundle, price: Fraction) -> Bundle:
    """Most valuable affordable bundle of ``remaining`` at ``price`` per item.

    Affordable means ``v(S) >= price * |S|``. Ties go to fewer items, then
    item order; the empty bundle is always affordable.
    """
    space: ItemSpace = valuation.space
    best: Optional[Tuple[tuple, Bundle]] = None
    for bundle in space.subbundles(remaining):
        value = valuation.value_query(bundle)
        if value < price * space.cardinality(bundle):
            continue
        key = (-value, space.order_key(bundle))
        if best is None or key < best[0]:
            best = (key, bundle)
    return best[1] if best is not None else 0


def framework_u(
    market: Market,
    epsilon: MoneyLike,
    tape: RandomTape,
    posted_price_charge: bool = False,
) -> MechanismResult:
    """Run all four phases; ``posted_price_charge`` bills ``p * |S|`` instead of the bid."""
    eps = check_epsilon(epsilon)
    space = ensure_capacity(market.items)
    trace = Trace()

    labels = draw_labels(market, eps, tape)
    trace.add("partition", labels=[label.value for label in labels])

    stat = [index for index, label in enumerate(labels) if label is PartitionLabel.STAT]
    opt_star = fractional_value(space, market.restricted_to(stat))
    trace.add("statistics", bidders=stat, fractional_optimum=format_exact(opt_star))

    bundles: List[Bundle] = [0] * market.n
    reserve_squared = opt_star * opt_star / space.size
    grand_group = [index for index, label in enumerate(labels) if label is PartitionLabel.GRAND]
    if grand_group:
        leader = max(grand_group, key=lambda index: (market.valuations[index].grand_value, -index))
        bid = market.valuations[leader].grand_value
        wins = bid > 0 and bid * bid >= reserve_squared
        trace.add("reserve", bidder=leader, bid=format_exact(bid), reserve_squared=format_exact(reserve_squared), wins=wins)
        if wins:
            bundles[leader] = space.grand
            logger.debug("framework-u: grand bundle to bidder %d at %s", leader, format_exact(bid))
            return MechanismResult(MECHANISM_ID, settle(market, bundles), trace.freeze())

    price = eps * opt_star / (8 * space.size)
    trace.add("posted-price", price=format_exact(price))
    remaining = space.grand
    for index, label in enumerate(labels):
        if label is not PartitionLabel.FIXED:
            continue
        bundle = demand_query(market.valuations[index], remaining, price)
        bundles[index] = bundle
        remaining = space.remove(remaining, bundle)
        trace.add("demand", bidder=index, bundle=space.to_json(bundle))

    outcome = settle(market, bundles)
    if posted_price_charge:
        payments = [price * space.cardinality(bundle) for bundle in bundles]
        outcome = Outcome.build(space, bundles, payments)
    return MechanismResult(MECHANISM_ID, outcome, trace.freeze())


__all__ = ["check_epsilon", "demand_query", "draw_labels", "framework_u"]
