"""Stable string identifiers for every mechanism."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Callable, Dict, Hashable, Optional, Tuple

from app.core.config import get_config
from common.errors import ContractError
from common.market import Market
from common.money import MoneyLike
from common.tape import RandomTape

from .framework_u import framework_u
from .models import MechanismResult
from .po import po_auction
from .revenue_max import revenue_max_payasbid
from .rules_3x4 import demo_3x4_rule, query_3x4_rule
from .single_parameter import single_parameter_greedy
from .strongest import strongest_bidder
from .two_by_two import golden_case, golden_ratio, randomized_2x2

Runner = Callable[[Market, Optional[MoneyLike], RandomTape, Dict[str, Any]], MechanismResult]


@dataclass(frozen=True)
class MechanismSpec:
    """``randomized``: outcome depends on the tape beyond tie-breaking.

    ``public_view`` maps a market to what bidders cannot influence by
    misreporting; audits skip misreports that change it.
    """

    mechanism_id: str
    description: str
    runner: Runner
    randomized: bool = False
    options: Tuple[str, ...] = ()
    public_view: Optional[Callable[[Market], Hashable]] = None


MECHANISMS: Dict[str, MechanismSpec] = {
    spec.mechanism_id: spec
    for spec in (
        MechanismSpec("po", "Pareto-optimal greedy auction", lambda market, eps, tape, opts: po_auction(market)),
        MechanismSpec(
            "revmax",
            "revenue-maximising allocation, pay-as-bid",
            lambda market, eps, tape, opts: revenue_max_payasbid(market),
        ),
        MechanismSpec(
            "sp-greedy",
            "monotone greedy for single-valued bidders",
            lambda market, eps, tape, opts: single_parameter_greedy(market),
        ),
        MechanismSpec(
            "golden",
            "golden-ratio 2x2 mechanism with a public strongest bidder",
            lambda market, eps, tape, opts: golden_ratio(market, tape),
            public_view=golden_case,
        ),
        MechanismSpec(
            "rand2x2",
            "randomized 2x2 split lottery",
            lambda market, eps, tape, opts: randomized_2x2(market, tape),
            randomized=True,
        ),
        MechanismSpec(
            "strongest",
            "grand bundle to the highest grand-bundle bid",
            lambda market, eps, tape, opts: strongest_bidder(market),
        ),
        MechanismSpec(
            "framework-u",
            "random sampling with grand-bundle reserve and posted item prices",
            lambda market, eps, tape, opts: framework_u(market, eps, tape, **opts),
            randomized=True,
            options=("posted_price_charge",),
        ),
        MechanismSpec(
            "demo3x4",
            "manipulable five-clause 3x4 rule",
            lambda market, eps, tape, opts: demo_3x4_rule(market),
        ),
        MechanismSpec(
            "query3x4",
            "single value-query 3x4 rule",
            lambda market, eps, tape, opts: query_3x4_rule(market),
        ),
    )
}


def get_mechanism(mechanism_id: str) -> MechanismSpec:
    try:
        return MECHANISMS[mechanism_id]
    except KeyError as exc:
        known = ", ".join(MECHANISMS)
        raise ContractError(f"unknown mechanism {mechanism_id!r}; choose one of {known}") from exc


def run_mechanism(
    mechanism_id: str,
    market: Market,
    epsilon: Optional[MoneyLike] = None,
    tape: Optional[RandomTape] = None,
    **options: Any,
) -> MechanismResult:
    """Run a mechanism by id; a missing tape or epsilon falls back to the configured defaults."""
    spec = get_mechanism(mechanism_id)
    unknown = set(options) - set(spec.options)
    if unknown:
        raise ContractError(f"{mechanism_id} does not accept {', '.join(sorted(unknown))}")
    config = get_config()
    if tape is None:
        tape = RandomTape(config.DEFAULT_SEED)
    if epsilon is None:
        epsilon = config.DEFAULT_EPSILON
    return spec.runner(market, epsilon, tape, options)


__all__ = ["MECHANISMS", "MechanismSpec", "get_mechanism", "run_mechanism"]
