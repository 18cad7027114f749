"""Replayable randomness for randomized mechanisms."""

from __future__ import annotations

import random
from enum import Enum
from fractions import Fraction
from typing import Iterable, List, Optional, Sequence, Tuple

from .errors import ContractError
from .money import to_money

_DRAW_BITS = 53
_SEED_LIMIT = 1 << 64


class PartitionLabel(str, Enum):
    """Role a bidder plays in the sampling framework."""

    GRAND = "grand"
    FIXED = "fixed"
    STAT = "stat"


class RandomTape:
    """Deterministic source of uniform draws in [0, 1).

    Scripted draws are consumed first, then the seeded generator takes over.
    Explicit partition labels, when given, replace the label draws of the
    sampling framework. A tape is consumed by one run; call :meth:`replay`
    for a fresh copy with the same configuration.
    """

    def __init__(
        self,
        seed: int = 0,
        draws: Iterable[object] | None = None,
        labels: Sequence[PartitionLabel | str] | None = None,
    ):
        if isinstance(seed, bool) or not isinstance(seed, int) or not 0 <= seed < _SEED_LIMIT:
            raise ContractError(f"seed must be an unsigned 64-bit integer, got {seed!r}")
        self.seed = seed
        self._scripted: Tuple[Fraction, ...] = tuple(self._checked_draw(value) for value in (draws or ()))
        self.labels: Optional[Tuple[PartitionLabel, ...]] = (
            tuple(PartitionLabel(label) for label in labels) if labels is not None else None
        )
        self._rng = random.Random(seed)
        self._position = 0
        self.history: List[Fraction] = []

    @staticmethod
    def _checked_draw(value: object) -> Fraction:
        draw = to_money(value)  # type: ignore[arg-type]
        if not 0 <= draw < 1:
            raise ContractError(f"scripted draws must lie in [0, 1), got {draw}")
        return draw

    def draw(self) -> Fraction:
        if self._position < len(self._scripted):
            value = self._scripted[self._position]
        else:
            value = Fraction(self._rng.getrandbits(_DRAW_BITS), 1 << _DRAW_BITS)
        self._position += 1
        self.history.append(value)
        return value

    def labels_for(self, bidders: int) -> Optional[Tuple[PartitionLabel, ...]]:
        if self.labels is None:
            return None
        if len(self.labels) != bidders:
            raise ContractError(f"{len(self.labels)} partition labels for {bidders} bidders")
        return self.labels

    def replay(self) -> "RandomTape":
        return RandomTape(self.seed, self._scripted, self.labels)

    @property
    def draws_used(self) -> int:
        return self._position

    def describe(self) -> str:
        parts = [f"seed={self.seed}"]
        if self._scripted:
            parts.append("draws=" + ",".join(str(value) for value in self._scripted))
        if self.labels is not None:
            parts.append("labels=" + ",".join(label.value for label in self.labels))
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"RandomTape({self.describe()})"


__all__ = ["PartitionLabel", "RandomTape"]
