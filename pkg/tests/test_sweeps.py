"""Tests for worst-case ratio sweeps."""

from __future__ import annotations

from fractions import Fraction

import pytest

from app.commands.sweep import sweep_family
from app.services.analysis.families import flat_unit_family, monotone_vectors, multi_unit_grid, two_by_two_grid
from app.services.analysis.fixtures import po_degradation_market
from app.services.analysis.ratios import ratio, worst_case_sweep
from common.errors import ContractError
from common.money import at_least_golden_ratio


def test_monotone_vectors_are_nondecreasing() -> None:
    vectors = monotone_vectors(2, 3)
    assert len(vectors) == 10
    assert all(first <= second for first, second in vectors)


def test_two_by_two_grid_keeps_bidder_zero_strongest() -> None:
    markets = two_by_two_grid(3)
    assert all(market.psb == 0 for market in markets)
    strict = two_by_two_grid(3, strict=True)
    assert len(strict) < len(markets)
    assert all(market.valuations[0].grand_value > market.valuations[1].grand_value for market in strict)


def test_golden_sweep_never_drops_below_the_golden_ratio() -> None:
    result = worst_case_sweep("golden", two_by_two_grid(20))
    assert at_least_golden_ratio(result.min_ratio)
    assert result.min_ratio < Fraction(63, 100)
    assert len(result.rows) == len(two_by_two_grid(20))


def test_randomized_sweep_in_expectation_hits_three_quarters() -> None:
    result = worst_case_sweep("rand2x2", two_by_two_grid(20, strict=True))
    assert result.min_ratio == Fraction(3, 4)
    witness = result.witness
    assert ratio("rand2x2", witness) == Fraction(3, 4)


@pytest.mark.parametrize(("units", "top"), [(1, 8), (2, 4), (3, 3), (4, 2)])
def test_strongest_sweep_respects_one_over_n(units: int, top: int) -> None:
    result = worst_case_sweep("strongest", multi_unit_grid(3, units, top))
    assert result.min_ratio >= Fraction(1, 3)


def test_strongest_flat_family_approaches_one_over_n() -> None:
    value = ratio("strongest", flat_unit_family(3, 3, Fraction(1, 1000)))
    assert Fraction(1, 3) <= value <= Fraction(1, 3) + Fraction(1, 100)


def test_po_ratio_degrades_as_values_converge() -> None:
    steps = (Fraction(1, 10), Fraction(1, 100), Fraction(1, 1000))
    ratios = [ratio("po", po_degradation_market(step)) for step in steps]
    assert ratios == sorted(ratios, reverse=True)
    assert all(value > Fraction(1, 2) for value in ratios)


def test_witness_is_the_first_minimum() -> None:
    family = two_by_two_grid(6)
    result = worst_case_sweep("golden", family)
    first = next(index for index, row in enumerate(result.rows) if row.ratio == result.min_ratio)
    assert result.witness_index == first
    assert result.witness == family[first]


def test_empty_family_is_rejected() -> None:
    with pytest.raises(ContractError):
        worst_case_sweep("po", [])


def test_expectation_only_for_the_lottery() -> None:
    with pytest.raises(ContractError):
        worst_case_sweep("golden", two_by_two_grid(2), expectation=True)


def test_sweep_family_shapes() -> None:
    assert len(sweep_family("golden", 4)) == len(two_by_two_grid(4))
    assert len(sweep_family("rand2x2", 4)) == len(two_by_two_grid(4, strict=True))
    assert len(sweep_family("po", 2, bidders=2, units=3)) == len(multi_unit_grid(2, 3, 2))
    with pytest.raises(ContractError):
        sweep_family("golden", 4, bidders=3)
    with pytest.raises(ContractError):
        sweep_family("po", -1)


def test_worker_pool_preserves_instance_order() -> None:
    family = two_by_two_grid(4)
    serial = worst_case_sweep("golden", family, workers=1)
    pooled = worst_case_sweep("golden", family, workers=2)
    assert [row.ratio for row in pooled.rows] == [row.ratio for row in serial.rows]
    assert pooled.witness_index == serial.witness_index
