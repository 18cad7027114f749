"""Item spaces and bundles.

A bundle is a plain ``int``. In a multi-unit space it is the number of units;
in a heterogeneous space it is a bitmask over the ordered item names (bit ``k``
set means item ``names[k]`` is in the bundle). The empty bundle is ``0`` in both.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Any, Iterable, Iterator, Sequence, Tuple

from .errors import DomainError

Bundle = int
EMPTY_BUNDLE: Bundle = 0


class ItemKind(str, Enum):
    """How the goods on sale are organised."""

    MULTI_UNIT = "multiunit"
    HETEROGENEOUS = "heterogeneous"


@dataclass(frozen=True)
class ItemSpace:
    """Either ``m`` identical units or ``m`` distinct named items."""

    kind: ItemKind
    size: int
    names: Tuple[str, ...] = ()

    def __post_init__(self) -> None:
        if isinstance(self.size, bool) or not isinstance(self.size, int) or self.size < 1:
            raise DomainError(f"item space needs at least one item, got {self.size!r}")
        if self.kind is ItemKind.HETEROGENEOUS:
            if len(self.names) != self.size:
                raise DomainError("heterogeneous space needs one name per item")
            if len(set(self.names)) != len(self.names):
                raise DomainError(f"item names must be unique: {list(self.names)}")
        elif self.names:
            raise DomainError("multi-unit spaces carry no item names")

    @classmethod
    def multi_unit(cls, units: int) -> "ItemSpace":
        return cls(ItemKind.MULTI_UNIT, units)

    @classmethod
    def heterogeneous(cls, names: Sequence[str]) -> "ItemSpace":
        return cls(ItemKind.HETEROGENEOUS, len(names), tuple(str(name) for name in names))

    @property
    def is_multi_unit(self) -> bool:
        return self.kind is ItemKind.MULTI_UNIT

    @property
    def grand(self) -> Bundle:
        """The bundle J of everything on sale."""
        if self.is_multi_unit:
            return self.size
        return (1 << self.size) - 1

    # -- bundle algebra ---------------------------------------------------

    def contains(self, bundle: Bundle) -> bool:
        if isinstance(bundle, bool) or not isinstance(bundle, int):
            return False
        return 0 <= bundle <= self.grand

    def validate(self, bundle: Bundle) -> Bundle:
        if not self.contains(bundle):
            raise DomainError(f"bundle {bundle!r} is outside the item space {self.describe()}")
        return bundle

    def is_subset(self, inner: Bundle, outer: Bundle) -> bool:
        if self.is_multi_unit:
            return inner <= outer
        return inner & ~outer == 0

    def cardinality(self, bundle: Bundle) -> int:
        if self.is_multi_unit:
            return bundle
        return bin(bundle).count("1")

    def remove(self, remaining: Bundle, taken: Bundle) -> Bundle:
        """Items of ``remaining`` left over once ``taken`` is handed out."""
        if self.is_multi_unit:
            return remaining - taken
        return remaining & ~taken

    def bundles(self) -> range:
        """Every bundle of the space, empty bundle first."""
        return range(self.grand + 1)

    def subbundles(self, within: Bundle) -> list[Bundle]:
        """Every bundle contained in ``within``, in ascending order."""
        if self.is_multi_unit:
            return list(range(within + 1))
        subsets = []
        current = within
        while True:
            subsets.append(current)
            if current == 0:
                break
            current = (current - 1) & within
        subsets.reverse()
        return subsets

    def indices(self, bundle: Bundle) -> Tuple[int, ...]:
        """Item positions of a heterogeneous bundle."""
        return tuple(k for k in range(self.size) if bundle >> k & 1)

    def order_key(self, bundle: Bundle) -> Tuple[Any, ...]:
        """Total order on bundles: cardinality first, then item order."""
        if self.is_multi_unit:
            return (bundle,)
        return (self.cardinality(bundle), self.indices(bundle))

    def fits_together(self, bundles: Iterable[Bundle]) -> bool:
        """True when the bundles can be handed out simultaneously."""
        if self.is_multi_unit:
            return sum(bundles) <= self.size
        used = 0
        for bundle in bundles:
            if used & bundle:
                return False
            used |= bundle
        return True

    # -- presentation -----------------------------------------------------

    def label(self, bundle: Bundle) -> str:
        if self.is_multi_unit:
            return str(bundle)
        return "{" + ",".join(self.names[k] for k in self.indices(bundle)) + "}"

    def to_json(self, bundle: Bundle) -> Any:
        if self.is_multi_unit:
            return bundle
        return [self.names[k] for k in self.indices(bundle)]

    def from_json(self, raw: Any) -> Bundle:
        """Parse a unit count or a list of item names."""
        if self.is_multi_unit:
            if isinstance(raw, bool) or not isinstance(raw, int):
                raise DomainError(f"multi-unit bundles are unit counts, got {raw!r}")
            return self.validate(raw)
        if not isinstance(raw, (list, tuple)):
            raise DomainError(f"heterogeneous bundles are lists of item names, got {raw!r}")
        return self.bundle_of(raw)

    def bundle_of(self, names: Iterable[str]) -> Bundle:
        bundle = EMPTY_BUNDLE
        for name in names:
            try:
                bundle |= 1 << self.names.index(name)
            except ValueError as exc:
                raise DomainError(f"unknown item {name!r} in {self.describe()}") from exc
        return bundle

    def describe(self) -> str:
        if self.is_multi_unit:
            return f"multiunit(m={self.size})"
        return f"heterogeneous({','.join(self.names)})"

    def to_dict(self) -> dict[str, Any]:
        if self.is_multi_unit:
            return {"multiunit": self.size}
        return {"heterogeneous": list(self.names)}

    def __iter__(self) -> Iterator[Bundle]:
        return iter(self.bundles())


__all__ = ["Bundle", "EMPTY_BUNDLE", "ItemKind", "ItemSpace"]
