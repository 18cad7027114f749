"""Fractional relaxation of winner determination."""

from __future__ import annotations

import logging
from fractions import Fraction
from typing import List, Sequence

from common.items import ItemSpace
from common.market import Market
from common.money import ONE, ZERO, format_exact
from common.valuation import Valuation

from .capacity import ensure_capacity
from .simplex import maximize

logger = logging.getLogger(__name__)


def fractional_value(space: ItemSpace, valuations: Sequence[Valuation]) -> Fraction:
    """LP optimum over atom variables x[i, S] for the given bidders.

    One row per bidder (sum of its variables <= 1) and, for distinct items,
    one row per item (total coverage <= 1); identical units share one row
    (sum of x * |S| <= m). Zero bidders give zero.
    """
    ensure_capacity(space)
    columns: List[tuple[int, int]] = []
    objective: List[Fraction] = []
    for bidder, valuation in enumerate(valuations):
        for bundle, _ in valuation.positive_atoms():
            columns.append((bidder, bundle))
            objective.append(valuation.value_query(bundle))
    if not columns:
        return ZERO

    rows: List[List[Fraction]] = []
    bounds: List[Fraction] = []
    for bidder in range(len(valuations)):
        rows.append([ONE if owner == bidder else ZERO for owner, _ in columns])
        bounds.append(ONE)
    if space.is_multi_unit:
        rows.append([Fraction(bundle) for _, bundle in columns])
        bounds.append(Fraction(space.size))
    else:
        for item in range(space.size):
            rows.append([ONE if bundle >> item & 1 else ZERO for _, bundle in columns])
            bounds.append(ONE)

    solution = maximize(objective, rows, bounds)
    logger.debug("fractional optimum %s over %d columns", format_exact(solution.value), len(columns))
    return solution.value


def fractional_opt(market: Market) -> Fraction:
    """Value of the fractional relaxation for every bidder of ``market``."""
    return fractional_value(market.items, market.valuations)


__all__ = ["fractional_opt", "fractional_value"]
