"""Tests for the reference fixture suite."""

from __future__ import annotations

from fractions import Fraction

import pytest

from app.services.analysis import fixtures as fixture_module
from app.services.analysis.fixtures import FIXTURES, golden_tightness_pair, reference_fixtures, two_by_three_pair
from app.services.mechanisms import golden_ratio, two_by_two
from common.errors import PreconditionError
from common.money import exceeds_golden_share


def _by_name() -> dict:
    return {result.name: result for result in reference_fixtures()}


def test_every_fixture_passes() -> None:
    results = reference_fixtures()
    assert len(results) == len(FIXTURES)
    failed = [f"{result.name}: {result.observed}" for result in results if not result.passed]
    assert failed == []


def test_fixture_names_are_unique() -> None:
    names = [fixture.name for fixture in FIXTURES]
    assert len(set(names)) == len(names)


def test_greedy_pair_reports_both_undominated() -> None:
    assert "both undominated" in _by_name()["greedy-pareto-pair"].observed


def test_inverted_golden_threshold_is_caught(monkeypatch: pytest.MonkeyPatch) -> None:
    monkeypatch.setattr(two_by_two, "exceeds_golden_share", lambda part, whole: not exceeds_golden_share(part, whole))
    results = _by_name()
    assert not results["golden-strongest-takes-both"].passed
    assert results["revmax-two-unit-shading"].passed


def test_failing_check_is_reported_not_raised(monkeypatch: pytest.MonkeyPatch) -> None:
    def broken(*args: object, **kwargs: object) -> None:
        raise PreconditionError("broken on purpose")

    monkeypatch.setattr(fixture_module, "golden_ratio", broken)
    result = _by_name()["golden-strongest-takes-both"]
    assert not result.passed
    assert result.observed.startswith("error:")


def test_golden_tightness_pair_values() -> None:
    first, second = golden_tightness_pair()
    assert first.valuations[1].unit_values() == (620, 621)
    assert golden_ratio(first).outcome.bundles == (1, 1)
    assert second.valuations[0].unit_values() == (0, 1000)


def test_two_by_three_pair_hides_one_unit_value() -> None:
    first, second = two_by_three_pair()
    assert first.valuations[1].unit_values()[0] == 10
    assert second.valuations[1].unit_values()[0] == 0
    assert second.valuations[1].unit_values()[1:] == (Fraction(101, 10), Fraction(102, 10))
