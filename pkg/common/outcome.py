"""Allocations, outcomes and value-bidder utilities."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Iterable, Sequence, Tuple

from .errors import ContractError, DomainError
from .items import Bundle, ItemSpace
from .market import Market
from .money import NEG_INFINITY, ZERO, ExtendedMoney, MoneyLike, format_exact, to_money
from .valuation import Valuation


@dataclass(frozen=True)
class Allocation:
    """One bundle per bidder; infeasible assignments never construct."""

    space: ItemSpace
    bundles: Tuple[Bundle, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "bundles", tuple(self.bundles))
        for bundle in self.bundles:
            self.space.validate(bundle)
        if not self.space.fits_together(self.bundles):
            labels = ", ".join(self.space.label(bundle) for bundle in self.bundles)
            raise DomainError(f"bundles overlap or exceed supply: ({labels})")

    @classmethod
    def empty(cls, space: ItemSpace, bidders: int) -> "Allocation":
        return cls(space, (0,) * bidders)

    @property
    def winners(self) -> Tuple[int, ...]:
        return tuple(index for index, bundle in enumerate(self.bundles) if bundle)

    def to_json(self) -> list[Any]:
        return [self.space.to_json(bundle) for bundle in self.bundles]

    def label(self) -> str:
        return "(" + ",".join(self.space.label(bundle) for bundle in self.bundles) + ")"

    def __len__(self) -> int:
        return len(self.bundles)


@dataclass(frozen=True)
class Outcome:
    """An allocation plus what every bidder is charged."""

    allocation: Allocation
    payments: Tuple[Fraction, ...]

    def __post_init__(self) -> None:
        payments = tuple(to_money(payment) for payment in self.payments)
        if len(payments) != len(self.allocation):
            raise ContractError(f"{len(payments)} payments for {len(self.allocation)} bidders")
        for index, (bundle, payment) in enumerate(zip(self.allocation.bundles, payments)):
            if payment < 0:
                raise DomainError(f"bidder {index} has a negative payment {format_exact(payment)}")
            if not bundle and payment != 0:
                raise DomainError(f"bidder {index} pays {format_exact(payment)} for nothing")
        object.__setattr__(self, "payments", payments)

    @classmethod
    def build(cls, space: ItemSpace, bundles: Sequence[Bundle], payments: Iterable[MoneyLike]) -> "Outcome":
        return cls(Allocation(space, tuple(bundles)), tuple(to_money(payment) for payment in payments))

    @classmethod
    def empty(cls, space: ItemSpace, bidders: int) -> "Outcome":
        return cls(Allocation.empty(space, bidders), (ZERO,) * bidders)

    @property
    def bundles(self) -> Tuple[Bundle, ...]:
        return self.allocation.bundles

    @property
    def winners(self) -> Tuple[int, ...]:
        return self.allocation.winners

    @property
    def revenue(self) -> Fraction:
        return revenue(self)

    def to_dict(self) -> dict[str, Any]:
        return {
            "allocation": self.allocation.to_json(),
            "payments": [format_exact(payment) for payment in self.payments],
        }


def utility(outcome: Outcome, truth: Valuation, bidder: int) -> ExtendedMoney:
    """Value-bidder utility: bundle value if affordable, else ``-inf``."""
    if not 0 <= bidder < len(outcome.payments):
        raise ContractError(f"bidder {bidder} is not part of the outcome")
    value = truth.value_query(outcome.bundles[bidder])
    if outcome.payments[bidder] <= value:
        return value
    return NEG_INFINITY


def revenue(outcome: Outcome) -> Fraction:
    return sum(outcome.payments, ZERO)


def utility_profile(outcome: Outcome, market: Market) -> Tuple[ExtendedMoney, ...]:
    """Seller revenue followed by every bidder's utility under ``market``."""
    utilities = tuple(utility(outcome, valuation, index) for index, valuation in enumerate(market.valuations))
    return (revenue(outcome),) + utilities


def is_individually_rational(outcome: Outcome, market: Market) -> bool:
    return all(
        payment <= valuation.value_query(bundle)
        for payment, bundle, valuation in zip(outcome.payments, outcome.bundles, market.valuations)
    )


__all__ = [
    "Allocation",
    "Outcome",
    "is_individually_rational",
    "revenue",
    "utility",
    "utility_profile",
]
