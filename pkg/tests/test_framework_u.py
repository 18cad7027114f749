"""Tests for the random-sampling framework mechanism."""

from __future__ import annotations

from fractions import Fraction

import pytest

from app.services.analysis.audit import AuditStatus, all_partition_tapes, audit_universal
from app.services.analysis.families import random_markets
from app.services.mechanisms import check_epsilon, demand_query, draw_labels, framework_u, run_mechanism
from common.errors import ContractError
from common.items import ItemSpace
from common.market import Market
from common.money import to_money
from common.tape import PartitionLabel, RandomTape
from common.valuation import Valuation

LABELS = ("grand", "fixed", "stat")


def sampling_market(grand_bid: int) -> Market:
    space = ItemSpace.heterogeneous(["A", "B", "C", "D"])
    return Market(
        space,
        (
            Valuation.from_atoms(space, [(space.grand, grand_bid)]),
            Valuation.from_atoms(
                space,
                [
                    (space.bundle_of(["A"]), 3),
                    (space.bundle_of(["A", "B"]), 4),
                    (space.bundle_of(["C", "D"]), 1),
                ],
            ),
            Valuation.from_atoms(space, [(space.grand, 40)]),
        ),
    )


def posted_price_market() -> Market:
    return Market.multi_unit([(5, 8), (4, 6), (3, 3)])


def test_epsilon_must_be_a_proper_fraction() -> None:
    assert check_epsilon("0.25") == Fraction(1, 4)
    for bad in ("0", "1", "-0.5"):
        with pytest.raises(ContractError):
            check_epsilon(bad)
    with pytest.raises(ContractError):
        framework_u(posted_price_market(), "1.5", RandomTape())


def test_labels_follow_draw_thresholds() -> None:
    market = posted_price_market()
    tape = RandomTape(draws=["0.1", "0.6", "0.9"])
    labels = draw_labels(market, Fraction(1, 2), tape)
    assert labels == (PartitionLabel.GRAND, PartitionLabel.FIXED, PartitionLabel.STAT)


def test_all_statistics_group_sells_nothing() -> None:
    result = framework_u(sampling_market(50), "1/2", RandomTape(labels=["stat"] * 3))
    assert result.outcome.bundles == (0, 0, 0)
    assert result.revenue == 0


def test_grand_bundle_clears_the_reserve() -> None:
    market = sampling_market(50)
    result = framework_u(market, "1/2", RandomTape(labels=LABELS))
    assert result.outcome.bundles == (market.items.grand, 0, 0)
    assert result.outcome.payments == (50, 0, 0)
    statistics = next(record for record in result.trace if record.step == "statistics")
    assert statistics.detail["fractional_optimum"] == "40"


def test_fixed_price_phase_answers_demand_queries() -> None:
    market = sampling_market(10)
    result = framework_u(market, "1/2", RandomTape(labels=LABELS))
    posted = next(record for record in result.trace if record.step == "posted-price")
    assert to_money(posted.detail["price"]) == Fraction(5, 8)
    assert result.outcome.bundles == (0, market.items.bundle_of(["A", "B"]), 0)
    assert result.outcome.payments == (0, 4, 0)


def test_demand_query_respects_the_price() -> None:
    space = ItemSpace.multi_unit(3)
    valuation = Valuation.from_unit_values(space, (5, 6, 9))
    assert demand_query(valuation, 3, Fraction(1)) == 3
    assert demand_query(valuation, 3, Fraction(4)) == 1
    assert demand_query(valuation, 3, Fraction(6)) == 0
    assert demand_query(valuation, 2, Fraction(1)) == 2


def test_phase_invariants_on_seeded_runs() -> None:
    runs = 0
    for seed, market in enumerate(random_markets(seed=17, count=1000, max_bidders=3, max_items=4)):
        result = framework_u(market, "1/2", RandomTape(seed))
        steps = {record.step: record.detail for record in result.trace}
        space = market.items
        outcome = result.outcome
        reserve = steps.get("reserve")
        if reserve is not None and reserve["wins"]:
            winner = reserve["bidder"]
            bid = market.valuations[winner].grand_value
            assert bid * bid >= to_money(reserve["reserve_squared"])
            assert outcome.bundles[winner] == space.grand
            assert outcome.winners == (winner,)
        else:
            price = to_money(steps["posted-price"]["price"])
            labels = steps["partition"]["labels"]
            for index, bundle in enumerate(outcome.bundles):
                if bundle:
                    assert labels[index] == "fixed"
                    assert market.valuations[index].value_query(bundle) >= price * space.cardinality(bundle)
        assert space.fits_together(outcome.bundles)
        runs += 1
    assert runs == 1000


def test_universal_truthfulness_over_every_labeling() -> None:
    markets = [posted_price_market(), sampling_market(10)]
    candidates = random_markets(seed=23, count=12, max_bidders=3, max_items=3, heterogeneous=True)
    markets += [market for market in candidates if market.n == 3][:2]
    for market in markets:
        verdict = audit_universal("framework-u", market, all_partition_tapes(market.n), epsilon="1/2")
        assert verdict.status is AuditStatus.NO_VIOLATION_FOUND
        assert verdict.checked > 0


def test_posted_price_charge_changes_payments_but_stays_truthful() -> None:
    market = posted_price_market()
    tape = RandomTape(labels=["fixed", "stat", "fixed"])
    as_bid = run_mechanism("framework-u", market, "1/2", tape.replay())
    posted = run_mechanism("framework-u", market, "1/2", tape.replay(), posted_price_charge=True)
    assert as_bid.outcome.bundles == posted.outcome.bundles == (2, 0, 0)
    assert as_bid.outcome.payments == (8, 0, 0)
    assert posted.outcome.payments == (Fraction(3, 8), 0, 0)

    verdict = audit_universal(
        "framework-u",
        market,
        all_partition_tapes(market.n),
        epsilon="1/2",
        posted_price_charge=True,
    )
    assert verdict.status is AuditStatus.NO_VIOLATION_FOUND


def test_zero_reserve_needs_a_positive_grand_bid() -> None:
    tape = RandomTape(labels=["grand", "stat"])
    silent = framework_u(Market.multi_unit([(0, 0), (0, 0)]), "1/2", tape.replay())
    assert silent.outcome.winners == ()
    assert not {record.step: record.detail for record in silent.trace}["reserve"]["wins"]

    keen = framework_u(Market.multi_unit([(0, 5), (0, 0)]), "1/2", tape.replay())
    assert keen.outcome.bundles == (2, 0)
    assert keen.outcome.payments == (5, 0)
