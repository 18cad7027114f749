"""Tests for the revenue oracles."""

from __future__ import annotations

from fractions import Fraction

import pytest

from app.core.config import TestingConfig, set_config
from app.services.analysis.families import random_markets
from app.services.oracles import (
    fractional_opt,
    maximize,
    naive_optimal_revenue,
    optimal_revenue,
    pareto_dominated,
)
from common.errors import CapacityError, ContractError, PreconditionError
from common.items import ItemSpace
from common.market import Market
from common.outcome import Outcome
from common.valuation import Valuation


def three_cycle_market() -> Market:
    space = ItemSpace.heterogeneous(["A", "B", "C"])
    pairs = (["A", "B"], ["B", "C"], ["C", "A"])
    return Market(space, tuple(Valuation.from_atoms(space, [(space.bundle_of(pair), 1)]) for pair in pairs))


def example_pair_market() -> Market:
    space = ItemSpace.heterogeneous(["A", "B"])
    a, b = space.bundle_of(["A"]), space.bundle_of(["B"])
    return Market(
        space,
        (
            Valuation.from_atoms(space, [(a, 8), (b, 5)]),
            Valuation.from_atoms(space, [(a, 7), (b, 6)]),
        ),
    )


def test_optimal_revenue_on_two_unit_market(shading_market: Market) -> None:
    solution = optimal_revenue(shading_market)
    assert solution.value == 20
    assert solution.allocation.bundles == (1, 1)


def test_optimal_revenue_single_bidder() -> None:
    space = ItemSpace.heterogeneous(["A", "B"])
    market = Market(space, (Valuation.from_atoms(space, [(space.grand, 5)]),))
    solution = optimal_revenue(market)
    assert solution.value == 5
    assert solution.allocation.bundles == (space.grand,)


def test_optimal_revenue_prefers_the_greatest_vector() -> None:
    """Three units; (2,1) and (1,2) both reach 20.1."""
    market = Market.multi_unit([("10", "10.1", "10.3"), ("10", "10.1", "10.2")])
    solution = optimal_revenue(market)
    assert solution.value == Fraction(201, 10)
    assert solution.allocation.bundles == (2, 1)


def test_optimal_revenue_matches_enumeration() -> None:
    for market in random_markets(seed=11, count=500, max_bidders=4, max_items=6):
        assert optimal_revenue(market).value == naive_optimal_revenue(market)


def test_optimal_revenue_respects_capacity() -> None:
    class TinyConfig(TestingConfig):
        MAX_UNITS = 3

    set_config(TinyConfig)
    with pytest.raises(CapacityError):
        optimal_revenue(Market.multi_unit([(1, 2, 3, 4)]))


def test_fractional_opt_examples() -> None:
    space = ItemSpace.heterogeneous(["A"])
    assert fractional_opt(Market(space, (Valuation.from_atoms(space, [(1, 10)]),))) == 10
    assert fractional_opt(three_cycle_market()) == Fraction(3, 2)
    assert optimal_revenue(three_cycle_market()).value == 1
    assert fractional_opt(Market.multi_unit([(10, 10), (10, 10)])) == 20


def test_fractional_opt_dominates_integer_optimum() -> None:
    for market in random_markets(seed=5, count=200):
        assert fractional_opt(market) >= optimal_revenue(market).value


def test_multi_unit_integrality_gap_is_at_most_two() -> None:
    for market in random_markets(seed=6, count=500, max_bidders=4, max_items=6, heterogeneous=False):
        integral = optimal_revenue(market).value
        fractional = fractional_opt(market)
        assert integral <= fractional <= 2 * integral


def test_fractional_opt_of_zero_market() -> None:
    assert fractional_opt(Market.multi_unit([(0, 0)])) == 0


def test_simplex_solves_small_program() -> None:
    """max 3x + 2y with x + y <= 4, x + 3y <= 6, x <= 3."""
    solution = maximize([3, 2], [[1, 1], [1, 3], [1, 0]], [4, 6, 3])
    assert solution.value == 11
    assert solution.point == (3, 1)


def test_simplex_detects_unbounded_program() -> None:
    with pytest.raises(ContractError):
        maximize([1, 1], [[1, -1]], [1])


def test_simplex_rejects_negative_bounds() -> None:
    with pytest.raises(ContractError):
        maximize([1], [[1]], [-1])


def test_pareto_pair_is_undominated() -> None:
    market = example_pair_market()
    space = market.items
    a, b = space.bundle_of(["A"]), space.bundle_of(["B"])
    assert pareto_dominated(Outcome.build(space, (b, a), (5, 7)), market) is None
    assert pareto_dominated(Outcome.build(space, (a, b), (8, 6)), market) is None


def test_empty_outcome_is_dominated() -> None:
    market = example_pair_market()
    witness = pareto_dominated(Outcome.empty(market.items, 2), market)
    assert witness is not None
    assert witness.revenue > 0


def test_pareto_requires_rational_outcome() -> None:
    market = example_pair_market()
    space = market.items
    overpaid = Outcome.build(space, (space.bundle_of(["B"]), 0), (9, 0))
    with pytest.raises(PreconditionError):
        pareto_dominated(overpaid, market)
