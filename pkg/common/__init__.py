"""Shared auction primitives: money, items, valuations, markets and outcomes."""

from .errors import (
    AuctionError,
    CapacityError,
    ContractError,
    DomainError,
    PreconditionError,
    ScenarioParseError,
)
from .items import EMPTY_BUNDLE, Bundle, ItemKind, ItemSpace
from .market import Market
from .money import NEG_INFINITY, ZERO, format_decimal, format_exact, format_extended, to_money
from .outcome import Allocation, Outcome, is_individually_rational, revenue, utility, utility_profile
from .tape import PartitionLabel, RandomTape
from .valuation import Valuation, value_query

__all__ = [
    "Allocation",
    "AuctionError",
    "Bundle",
    "CapacityError",
    "ContractError",
    "DomainError",
    "EMPTY_BUNDLE",
    "ItemKind",
    "ItemSpace",
    "Market",
    "NEG_INFINITY",
    "Outcome",
    "PartitionLabel",
    "PreconditionError",
    "RandomTape",
    "ScenarioParseError",
    "Valuation",
    "ZERO",
    "format_decimal",
    "format_exact",
    "format_extended",
    "is_individually_rational",
    "revenue",
    "to_money",
    "utility",
    "utility_profile",
    "value_query",
]
