"""Exception hierarchy shared by every auction module."""

from __future__ import annotations


class AuctionError(RuntimeError):
    """Base auction exception."""


class DomainError(AuctionError):
    """Raised when a bundle or valuation does not belong to its item space."""


class CapacityError(AuctionError):
    """Raised when a market exceeds what the exact oracles can enumerate."""


class ContractError(AuctionError):
    """Raised when an input has the wrong shape for the requested operation."""


class PreconditionError(AuctionError):
    """Raised when a mechanism's stated precondition does not hold."""


class ScenarioParseError(AuctionError):
    """Raised when a scenario file cannot be turned into a market."""


__all__ = [
    "AuctionError",
    "CapacityError",
    "ContractError",
    "DomainError",
    "PreconditionError",
    "ScenarioParseError",
]
