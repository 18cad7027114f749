"""Approximation ratios and worst-case sweeps."""

from __future__ import annotations

import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Dict, Iterable, List, Optional, Sequence, Tuple

from app.core.config import get_config
from app.services.mechanisms.registry import get_mechanism, run_mechanism
from app.services.mechanisms.two_by_two import exact_expected_revenue
from app.services.oracles.winner_determination import optimal_revenue
from common.errors import ContractError
from common.market import Market
from common.money import ONE, MoneyLike, format_decimal, format_exact
from common.tape import RandomTape

logger = logging.getLogger(__name__)

EXPECTATION_MECHANISMS = ("rand2x2",)


def ratio(
    mechanism_id: str,
    market: Market,
    epsilon: Optional[MoneyLike] = None,
    tape: Optional[RandomTape] = None,
    expectation: Optional[bool] = None,
    **options: Any,
) -> Fraction:
    """Mechanism revenue over the optimal revenue; 1 when the optimum is zero.

    The randomized 2x2 mechanism is measured in expectation unless a tape is
    given; every other mechanism runs once on ``tape``.
    """
    get_mechanism(mechanism_id)
    if expectation is None:
        expectation = mechanism_id in EXPECTATION_MECHANISMS and tape is None
    if expectation and mechanism_id not in EXPECTATION_MECHANISMS:
        raise ContractError(f"{mechanism_id} has no closed-form expected revenue")
    optimum = optimal_revenue(market).value
    if expectation:
        earned = exact_expected_revenue(market)
    else:
        earned = run_mechanism(mechanism_id, market, epsilon, tape, **options).revenue
    if optimum == 0:
        return ONE
    return earned / optimum


@dataclass(frozen=True)
class SweepRow:
    index: int
    market: Market
    ratio: Fraction

    def to_dict(self) -> Dict[str, Any]:
        return {
            "instance": self.index,
            "market": self.market.describe(),
            "ratio": format_exact(self.ratio),
            "ratio_decimal": format_decimal(self.ratio, get_config().DECIMAL_PLACES),
        }


@dataclass(frozen=True)
class SweepResult:
    mechanism: str
    min_ratio: Fraction
    witness: Market
    witness_index: int
    rows: Tuple[SweepRow, ...]


def _evaluate(job: Tuple[str, Market, Optional[MoneyLike], Optional[bool], int]) -> Fraction:
    mechanism_id, market, epsilon, expectation, seed = job
    return ratio(mechanism_id, market, epsilon, RandomTape(seed) if not expectation else None, expectation)


def worst_case_sweep(
    mechanism_id: str,
    family: Iterable[Market],
    epsilon: Optional[MoneyLike] = None,
    expectation: Optional[bool] = None,
    workers: Optional[int] = None,
) -> SweepResult:
    """Minimum ratio over ``family``; the first instance attaining it is the witness.

    Randomized mechanisms other than those measured in expectation run on a
    fresh tape seeded with the configured default seed. Results are merged
    in instance order, whatever the worker count.
    """
    get_mechanism(mechanism_id)
    markets: Sequence[Market] = list(family)
    if not markets:
        raise ContractError("sweep family is empty")
    config = get_config()
    if expectation is None:
        expectation = mechanism_id in EXPECTATION_MECHANISMS
    jobs = [(mechanism_id, market, epsilon, expectation, config.DEFAULT_SEED) for market in markets]
    workers = workers if workers is not None else config.SWEEP_WORKERS
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            ratios: List[Fraction] = list(pool.map(_evaluate, jobs, chunksize=max(1, len(jobs) // (workers * 8))))
    else:
        ratios = [_evaluate(job) for job in jobs]

    rows = tuple(SweepRow(index, market, value) for index, (market, value) in enumerate(zip(markets, ratios)))
    worst = min(rows, key=lambda row: (row.ratio, row.index))
    logger.info(
        "%s sweep over %d instances: min ratio %s at instance %d",
        mechanism_id,
        len(rows),
        format_decimal(worst.ratio),
        worst.index,
    )
    return SweepResult(mechanism_id, worst.ratio, worst.market, worst.index, rows)


__all__ = ["SweepResult", "SweepRow", "ratio", "worst_case_sweep"]
