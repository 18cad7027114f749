"""Exact winner determination (the optimal-revenue benchmark)."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterator, List, Sequence, Tuple

from common.items import Bundle, ItemSpace
from common.market import Market
from common.money import ZERO, format_exact
from common.outcome import Allocation
from common.valuation import Atom, Valuation

from .capacity import ensure_capacity

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class OptimalSolution:
    value: Fraction
    allocation: Allocation

    def to_dict(self) -> dict:
        return {"value": format_exact(self.value), "allocation": self.allocation.to_json()}


def candidate_bundles(valuation: Valuation) -> Tuple[Atom, ...]:
    """Atoms worth handing out: positive and not matched by a smaller contained atom."""
    space = valuation.space
    positive = valuation.positive_atoms()
    minimal = []
    for bundle, value in positive:
        dominated = any(
            other != bundle and other_value >= value and space.is_subset(other, bundle)
            for other, other_value in positive
        )
        if not dominated:
            minimal.append((bundle, valuation.value_query(bundle)))
    return tuple(minimal)


def _vector_key(space: ItemSpace, bundles: Sequence[Bundle]) -> Tuple:
    return tuple(space.order_key(bundle) for bundle in bundles)


def optimal_revenue(market: Market) -> OptimalSolution:
    """Revenue-maximising feasible allocation and its summed value.

    Dynamic program over (bidder, remaining items); each bidder either gets
    nothing or one of its candidate atoms. Among optimal allocations the one
    with the greatest bundle vector (earlier bidders first) is returned.
    """
    space = ensure_capacity(market.items)
    candidates = [candidate_bundles(valuation) for valuation in market.valuations]
    memo: Dict[Tuple[int, Bundle], Tuple[Fraction, Tuple[Bundle, ...]]] = {}

    def solve(index: int, remaining: Bundle) -> Tuple[Fraction, Tuple[Bundle, ...]]:
        if index == market.n:
            return ZERO, ()
        key = (index, remaining)
        if key in memo:
            return memo[key]
        best_value, best_vector = ZERO, ()
        first = True
        for bundle, value in ((0, ZERO),) + candidates[index]:
            if not space.is_subset(bundle, remaining):
                continue
            rest_value, rest_vector = solve(index + 1, space.remove(remaining, bundle))
            total = value + rest_value
            vector = (bundle,) + rest_vector
            if (
                first
                or total > best_value
                or (total == best_value and _vector_key(space, vector) > _vector_key(space, best_vector))
            ):
                best_value, best_vector = total, vector
                first = False
        memo[key] = (best_value, best_vector)
        return memo[key]

    value, bundles = solve(0, space.grand)
    logger.debug("optimal revenue %s via %s (%d states)", format_exact(value), bundles, len(memo))
    return OptimalSolution(value, Allocation(space, bundles))


def feasible_allocations(space: ItemSpace, bidders: int) -> Iterator[Tuple[Bundle, ...]]:
    """Every feasible bundle vector, in a fixed order."""
    ensure_capacity(space)

    def extend(index: int, remaining: Bundle, prefix: List[Bundle]) -> Iterator[Tuple[Bundle, ...]]:
        if index == bidders:
            yield tuple(prefix)
            return
        for bundle in space.subbundles(remaining):
            prefix.append(bundle)
            yield from extend(index + 1, space.remove(remaining, bundle), prefix)
            prefix.pop()

    yield from extend(0, space.grand, [])


def allocation_value(market: Market, bundles: Sequence[Bundle]) -> Fraction:
    return sum(
        (valuation.value_query(bundle) for valuation, bundle in zip(market.valuations, bundles)),
        ZERO,
    )


def naive_optimal_revenue(market: Market) -> Fraction:
    """Optimal revenue by full enumeration; a cross-check for small markets."""
    return max(allocation_value(market, bundles) for bundles in feasible_allocations(market.items, market.n))


__all__ = [
    "OptimalSolution",
    "allocation_value",
    "candidate_bundles",
    "feasible_allocations",
    "naive_optimal_revenue",
    "optimal_revenue",
]
