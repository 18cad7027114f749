"""Unilateral-deviation truthfulness audits.

Every audit compares a bidder's utility, measured with its true valuation,
when it reports the truth against each misreport of a :class:`DeviationSet`.
Opponents report truthfully unless ``opponent_grid`` is set, in which case
every combination of opponent misreports is tried as well. Misreports the
mechanism rejects, or that change what its registry entry declares public,
are skipped. A verdict of
``no_violation_found`` only covers the searched grid.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from itertools import product
from typing import Any, Callable, Dict, Hashable, Iterator, Optional, Sequence

from app.services.mechanisms.registry import get_mechanism, run_mechanism
from app.services.mechanisms.two_by_two import lottery_2x2
from common.errors import ContractError, PreconditionError
from common.market import Market
from common.money import NEG_INFINITY, ZERO, ExtendedMoney, MoneyLike, format_extended
from common.outcome import Outcome, utility
from common.tape import PartitionLabel, RandomTape
from common.valuation import Valuation

from .deviations import DeviationSet

logger = logging.getLogger(__name__)

Evaluator = Callable[[Market, Valuation, int], ExtendedMoney]


class AuditMode(str, Enum):
    DETERMINISTIC = "det"
    UNIVERSAL = "universal"
    EXPECTATION = "expectation"


class AuditStatus(str, Enum):
    NO_VIOLATION_FOUND = "no_violation_found"
    VIOLATION = "violation"


@dataclass(frozen=True)
class ViolationWitness:
    """A profitable misreport: ``reported`` is the market the mechanism saw."""

    bidder: int
    truth: Valuation
    misreport: Valuation
    reported: Market
    truthful_utility: ExtendedMoney
    deviating_utility: ExtendedMoney
    tape: Optional[RandomTape] = None

    def to_dict(self) -> Dict[str, Any]:
        payload: Dict[str, Any] = {
            "bidder": self.bidder,
            "truth": self.truth.to_dict(),
            "misreport": self.misreport.to_dict(),
            "truthful_utility": format_extended(self.truthful_utility),
            "deviating_utility": format_extended(self.deviating_utility),
        }
        if self.tape is not None:
            payload["seed"] = self.tape.seed
            if self.tape.labels is not None:
                payload["partition_labels"] = [label.value for label in self.tape.labels]
        return payload


@dataclass(frozen=True)
class AuditVerdict:
    mechanism: str
    mode: AuditMode
    status: AuditStatus
    checked: int
    witness: Optional[ViolationWitness] = None

    @property
    def violation(self) -> bool:
        return self.status is AuditStatus.VIOLATION

    def to_dict(self) -> Dict[str, Any]:
        return {
            "mechanism": self.mechanism,
            "mode": self.mode.value,
            "status": self.status.value,
            "checked": self.checked,
            "witness": self.witness.to_dict() if self.witness is not None else None,
        }


def _opponent_profiles(market: Market, bidder: int, deviations: DeviationSet, opponent_grid: bool) -> Iterator[Market]:
    if not opponent_grid:
        yield market
        return
    choices = [
        deviations.for_bidder(market, other) if other != bidder else (market.valuations[bidder],)
        for other in range(market.n)
    ]
    for reports in product(*choices):
        try:
            yield Market(market.items, tuple(reports), market.psb)
        except PreconditionError:
            continue


def _keeps_public_view(view: Optional[Callable[[Market], Hashable]], public: Hashable, market: Market) -> bool:
    if view is None:
        return True
    try:
        return view(market) == public
    except (PreconditionError, ContractError):
        return False


def _scan(
    mechanism_id: str,
    mode: AuditMode,
    market: Market,
    deviations: DeviationSet,
    evaluate: Evaluator,
    opponent_grid: bool,
    tape: Optional[RandomTape] = None,
) -> AuditVerdict:
    view = get_mechanism(mechanism_id).public_view
    public = view(market) if view is not None else None
    checked = 0
    for bidder in range(market.n):
        truth = market.valuations[bidder]
        misreports = deviations.for_bidder(market, bidder)
        for base in _opponent_profiles(market, bidder, deviations, opponent_grid):
            if not _keeps_public_view(view, public, base):
                continue
            try:
                honest = evaluate(base, truth, bidder)
            except (PreconditionError, ContractError):
                if base is market:
                    raise
                continue
            for misreport in misreports:
                try:
                    reported = base.with_valuation(bidder, misreport)
                    if not _keeps_public_view(view, public, reported):
                        continue
                    deviating = evaluate(reported, truth, bidder)
                except (PreconditionError, ContractError):
                    continue
                checked += 1
                if deviating > honest:
                    witness = ViolationWitness(bidder, truth, misreport, reported, honest, deviating, tape)
                    logger.info(
                        "%s %s audit: bidder %d gains %s -> %s",
                        mechanism_id,
                        mode.value,
                        bidder,
                        format_extended(honest),
                        format_extended(deviating),
                    )
                    return AuditVerdict(mechanism_id, mode, AuditStatus.VIOLATION, checked, witness)
    logger.info("%s %s audit: %d deviations, no violation found", mechanism_id, mode.value, checked)
    return AuditVerdict(mechanism_id, mode, AuditStatus.NO_VIOLATION_FOUND, checked)


def audit_deterministic(
    mechanism_id: str,
    market: Market,
    deviations: Optional[DeviationSet] = None,
    opponent_grid: bool = False,
    tape: Optional[RandomTape] = None,
    **options: Any,
) -> AuditVerdict:
    """Audit with every run replaying ``tape``, so tie-breaking draws match what ``run`` sees."""
    if get_mechanism(mechanism_id).randomized:
        raise ContractError(f"{mechanism_id} is randomized; audit it in universal or expectation mode")

    def evaluate(reported: Market, truth: Valuation, bidder: int) -> ExtendedMoney:
        replayed = tape.replay() if tape is not None else None
        return utility(run_mechanism(mechanism_id, reported, None, replayed, **options).outcome, truth, bidder)

    return _scan(
        mechanism_id,
        AuditMode.DETERMINISTIC,
        market,
        deviations or DeviationSet.default(),
        evaluate,
        opponent_grid,
        tape,
    )


def audit_universal(
    mechanism_id: str,
    market: Market,
    tapes: Sequence[RandomTape],
    epsilon: Optional[MoneyLike] = None,
    deviations: Optional[DeviationSet] = None,
    opponent_grid: bool = False,
    **options: Any,
) -> AuditVerdict:
    """Deterministic audit repeated with each tape held fixed."""
    get_mechanism(mechanism_id)
    deviations = deviations or DeviationSet.default()
    checked = 0
    for tape in tapes:

        def evaluate(reported: Market, truth: Valuation, bidder: int, tape: RandomTape = tape) -> ExtendedMoney:
            result = run_mechanism(mechanism_id, reported, epsilon, tape.replay(), **options)
            return utility(result.outcome, truth, bidder)

        verdict = _scan(mechanism_id, AuditMode.UNIVERSAL, market, deviations, evaluate, opponent_grid, tape)
        checked += verdict.checked
        if verdict.violation:
            return AuditVerdict(mechanism_id, AuditMode.UNIVERSAL, AuditStatus.VIOLATION, checked, verdict.witness)
    return AuditVerdict(mechanism_id, AuditMode.UNIVERSAL, AuditStatus.NO_VIOLATION_FOUND, checked)


def expected_utility(market: Market, truth: Valuation, bidder: int) -> ExtendedMoney:
    """Expected utility under the 2x2 split lottery; any risk of overpaying scores ``-inf``."""
    total: Fraction = ZERO
    for probability, outcome in lottery_2x2(market):
        value = utility(outcome, truth, bidder)
        if value == NEG_INFINITY:
            return NEG_INFINITY
        total += probability * value
    return total


def audit_expectation_2x2(
    market: Market,
    deviations: Optional[DeviationSet] = None,
    opponent_grid: bool = False,
) -> AuditVerdict:
    lottery_2x2(market)
    return _scan(
        "rand2x2",
        AuditMode.EXPECTATION,
        market,
        deviations or DeviationSet.default(),
        expected_utility,
        opponent_grid,
    )


def all_partition_tapes(bidders: int, seed: int = 0) -> tuple[RandomTape, ...]:
    """One tape per explicit labeling of ``bidders`` bidders."""
    return tuple(RandomTape(seed, labels=labels) for labels in product(tuple(PartitionLabel), repeat=bidders))


def replay_witness(mechanism_id: str, witness: ViolationWitness, epsilon: Optional[MoneyLike] = None, **options: Any) -> Outcome:
    """Re-run the mechanism on the witness's reported market."""
    tape = witness.tape.replay() if witness.tape is not None else None
    return run_mechanism(mechanism_id, witness.reported, epsilon, tape, **options).outcome


__all__ = [
    "AuditMode",
    "AuditStatus",
    "AuditVerdict",
    "ViolationWitness",
    "all_partition_tapes",
    "audit_deterministic",
    "audit_expectation_2x2",
    "audit_universal",
    "expected_utility",
    "replay_witness",
]
