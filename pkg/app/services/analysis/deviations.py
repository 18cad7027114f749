"""Finite misreport sets used by the truthfulness audits."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Iterator, List, Optional, Sequence, Tuple

from app.core.config import get_config
from common.market import Market
from common.money import ZERO, MoneyLike, to_money
from common.valuation import Valuation


@dataclass(frozen=True)
class DeviationSet:
    """Generator of misreports for one bidder of a market.

    The truth comes first, then every atom scaled by each factor, then the
    truth with one atom zeroed, then, for markets with at most
    ``small_market_bundles`` non-empty bundles, every valuation assigning
    grid values to those bundles. The default grid is zero plus every atom
    value appearing in the market. Duplicates are dropped.
    """

    scale_factors: Tuple[Fraction, ...] = ()
    zero_atoms: bool = True
    value_grid: Optional[Tuple[Fraction, ...]] = None
    small_market_bundles: int = 0
    full_grid: bool = True

    @classmethod
    def default(
        cls,
        scale_factors: Optional[Sequence[MoneyLike]] = None,
        value_grid: Optional[Sequence[MoneyLike]] = None,
        full_grid: bool = True,
    ) -> "DeviationSet":
        config = get_config()
        factors = scale_factors if scale_factors is not None else config.SCALE_FACTORS
        return cls(
            scale_factors=tuple(to_money(factor) for factor in factors),
            value_grid=tuple(to_money(value) for value in value_grid) if value_grid is not None else None,
            small_market_bundles=config.SMALL_MARKET_BUNDLES,
            full_grid=full_grid,
        )

    def grid_for(self, market: Market) -> Tuple[Fraction, ...]:
        if self.value_grid is not None:
            return tuple(sorted(set(self.value_grid)))
        values = {ZERO}
        for valuation in market.valuations:
            values.update(value for _, value in valuation.atoms)
        return tuple(sorted(values))

    def _grid_reports(self, market: Market) -> Iterator[Valuation]:
        space = market.items
        bundles = [bundle for bundle in space.bundles() if bundle]
        if not self.full_grid or len(bundles) > self.small_market_bundles:
            return
        grid = self.grid_for(market)
        for values in product(grid, repeat=len(bundles)):
            yield Valuation(space, tuple(zip(bundles, values)))

    def for_bidder(self, market: Market, bidder: int) -> Tuple[Valuation, ...]:
        truth = market.valuations[bidder]
        space = market.items
        reports: List[Valuation] = [truth]
        seen = {truth}

        def offer(report: Valuation) -> None:
            if report not in seen:
                seen.add(report)
                reports.append(report)

        for factor in self.scale_factors:
            offer(Valuation(space, tuple((bundle, value * factor) for bundle, value in truth.atoms)))
        if self.zero_atoms:
            for index in range(len(truth.atoms)):
                offer(Valuation(space, tuple(atom if position != index else (atom[0], ZERO) for position, atom in enumerate(truth.atoms))))
        for report in self._grid_reports(market):
            offer(report)
        return tuple(reports)


__all__ = ["DeviationSet"]
