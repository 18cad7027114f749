"""Markets: an item space plus the ordered bidder valuations."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Iterable, Optional, Sequence, Tuple

from .errors import DomainError, PreconditionError
from .items import ItemSpace
from .money import MoneyLike, format_exact
from .valuation import Valuation


@dataclass(frozen=True)
class Market:
    """Bidders are indexed from 0 in valuation order.

    ``psb`` names the publicly known strongest bidder; it must hold a weakly
    highest grand-bundle value, checked on construction.
    """

    items: ItemSpace
    valuations: Tuple[Valuation, ...]
    psb: Optional[int] = None

    def __post_init__(self) -> None:
        object.__setattr__(self, "valuations", tuple(self.valuations))
        if not self.valuations:
            raise DomainError("a market needs at least one bidder")
        for index, valuation in enumerate(self.valuations):
            if valuation.space != self.items:
                raise DomainError(f"bidder {index} is valued over {valuation.space.describe()}, market sells {self.items.describe()}")
        if self.psb is not None:
            if isinstance(self.psb, bool) or not isinstance(self.psb, int) or not 0 <= self.psb < self.n:
                raise PreconditionError(f"strongest bidder index {self.psb!r} is not a bidder")
            top = self.valuations[self.psb].grand_value
            for index, valuation in enumerate(self.valuations):
                if valuation.grand_value > top:
                    raise PreconditionError(
                        f"bidder {self.psb} is not the strongest: bidder {index} bids "
                        f"{format_exact(valuation.grand_value)} > {format_exact(top)} on the grand bundle"
                    )

    @classmethod
    def multi_unit(
        cls,
        rows: Sequence[Sequence[MoneyLike]],
        units: Optional[int] = None,
        psb: Optional[int] = None,
    ) -> "Market":
        """Build a multi-unit market from per-bidder ``(v(1), ..., v(m))`` rows."""
        size = units if units is not None else max((len(row) for row in rows), default=0)
        space = ItemSpace.multi_unit(size)
        return cls(space, tuple(Valuation.from_unit_values(space, row) for row in rows), psb)

    @property
    def n(self) -> int:
        return len(self.valuations)

    @property
    def m(self) -> int:
        return self.items.size

    @property
    def shape(self) -> Tuple[int, int]:
        return self.n, self.m

    def grand_values(self) -> Tuple[Fraction, ...]:
        return tuple(valuation.grand_value for valuation in self.valuations)

    def strongest_index(self) -> int:
        """Highest grand-bundle bidder; lowest index on ties."""
        values = self.grand_values()
        top = max(values)
        return values.index(top)

    def with_valuation(self, index: int, valuation: Valuation) -> "Market":
        """Same market with one report replaced; re-validates ``psb``."""
        valuations = list(self.valuations)
        valuations[index] = valuation
        return Market(self.items, tuple(valuations), self.psb)

    def with_psb(self, psb: Optional[int]) -> "Market":
        return Market(self.items, self.valuations, psb)

    def restricted_to(self, indices: Iterable[int]) -> Tuple[Valuation, ...]:
        return tuple(self.valuations[index] for index in indices)

    def to_dict(self) -> dict[str, Any]:
        payload: dict[str, Any] = {
            "items": self.items.to_dict(),
            "bidders": [valuation.to_dict() for valuation in self.valuations],
        }
        if self.psb is not None:
            payload["psb"] = self.psb
        return payload

    def describe(self) -> str:
        bidders = " | ".join(f"b{index}={valuation.describe()}" for index, valuation in enumerate(self.valuations))
        return f"{self.items.describe()} {bidders}"


__all__ = ["Market"]
