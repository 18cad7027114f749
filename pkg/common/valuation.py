"""XOR valuations with free-disposal closure."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Iterable, Optional, Sequence, Tuple

from .errors import DomainError
from .items import Bundle, ItemSpace
from .money import ZERO, MoneyLike, format_exact, to_money

Atom = Tuple[Bundle, Fraction]


def _normalise_atoms(space: ItemSpace, atoms: Iterable[Tuple[Bundle, MoneyLike]], cap: Optional[Fraction]) -> Tuple[Atom, ...]:
    best: dict[Bundle, Fraction] = {}
    for raw_bundle, raw_value in atoms:
        bundle = space.validate(raw_bundle)
        try:
            value = to_money(raw_value)
        except ValueError as exc:
            raise DomainError(f"atom value for {space.label(bundle)}: {exc}") from exc
        if value < 0:
            raise DomainError(f"atom value for {space.label(bundle)} is negative: {format_exact(value)}")
        if cap is not None and value > cap:
            value = cap
        if bundle == 0 or value == 0:
            # zero atoms never change a query; v(empty) is pinned to zero
            continue
        if bundle not in best or value > best[bundle]:
            best[bundle] = value
    return tuple(sorted(best.items(), key=lambda atom: space.order_key(atom[0])))


@dataclass(frozen=True)
class Valuation:
    """A bidder's XOR bid: atoms (bundle, value), closed under free disposal.

    ``value_query(S)`` is the best atom contained in ``S``. A budget cap, when
    given, is applied to every atom at construction time so every queried
    value stays below it.
    """

    space: ItemSpace
    atoms: Tuple[Atom, ...]
    budget_cap: Optional[Fraction] = None
    _values: dict = field(default=None, init=False, repr=False, compare=False, hash=False)  # type: ignore[assignment]

    def __post_init__(self) -> None:
        cap = self.budget_cap
        if cap is not None:
            try:
                cap = to_money(cap)
            except ValueError as exc:
                raise DomainError(f"budget cap: {exc}") from exc
            if cap < 0:
                raise DomainError(f"budget cap must be nonnegative, got {format_exact(cap)}")
            object.__setattr__(self, "budget_cap", cap)
        object.__setattr__(self, "atoms", _normalise_atoms(self.space, self.atoms, cap))
        object.__setattr__(self, "_values", {})

    # -- constructors -----------------------------------------------------

    @classmethod
    def from_atoms(
        cls,
        space: ItemSpace,
        atoms: Iterable[Tuple[Bundle, MoneyLike]],
        budget_cap: Optional[MoneyLike] = None,
    ) -> "Valuation":
        return cls(space, tuple(atoms), budget_cap)  # type: ignore[arg-type]

    @classmethod
    def from_unit_values(cls, space: ItemSpace, values: Sequence[MoneyLike], budget_cap: Optional[MoneyLike] = None) -> "Valuation":
        """Multi-unit valuation from ``(v(1), ..., v(k))``; one atom per count."""
        if not space.is_multi_unit:
            raise DomainError("unit values only describe multi-unit valuations")
        if len(values) > space.size:
            raise DomainError(f"{len(values)} unit values for {space.size} units")
        return cls.from_atoms(space, ((count, value) for count, value in enumerate(values, start=1)), budget_cap)

    @classmethod
    def zero(cls, space: ItemSpace) -> "Valuation":
        return cls(space, ())

    # -- queries ----------------------------------------------------------

    def value_query(self, bundle: Bundle) -> Fraction:
        """Value of ``bundle`` under free disposal."""
        cached = self._values.get(bundle)
        if cached is not None:
            return cached
        self.space.validate(bundle)
        best = ZERO
        for atom_bundle, value in self.atoms:
            if value > best and self.space.is_subset(atom_bundle, bundle):
                best = value
        self._values[bundle] = best
        return best

    @property
    def grand_value(self) -> Fraction:
        return self.value_query(self.space.grand)

    def unit_values(self) -> Tuple[Fraction, ...]:
        """``(v(1), ..., v(m))`` for a multi-unit valuation."""
        if not self.space.is_multi_unit:
            raise DomainError("unit values only describe multi-unit valuations")
        return tuple(self.value_query(count) for count in range(1, self.space.size + 1))

    def positive_atoms(self) -> Tuple[Atom, ...]:
        return tuple(atom for atom in self.atoms if atom[1] > 0)

    @property
    def is_single_minded(self) -> bool:
        return len(self.positive_atoms()) == 1

    @property
    def is_single_valued(self) -> bool:
        """Every positive atom carries the same value."""
        values = {value for _, value in self.positive_atoms()}
        return len(values) == 1

    # -- derived valuations -----------------------------------------------

    def scaled(self, factor: MoneyLike) -> "Valuation":
        ratio = to_money(factor)
        if ratio < 0:
            raise DomainError("scale factor must be nonnegative")
        return Valuation(self.space, tuple((bundle, value * ratio) for bundle, value in self.atoms), self.budget_cap)

    def with_atom_value(self, index: int, value: MoneyLike) -> "Valuation":
        atoms = list(self.atoms)
        bundle, _ = atoms[index]
        atoms[index] = (bundle, to_money(value))
        return Valuation(self.space, tuple(atoms), self.budget_cap)

    def without_atom(self, index: int) -> "Valuation":
        return self.with_atom_value(index, ZERO)

    # -- presentation -----------------------------------------------------

    def to_dict(self) -> dict[str, Any]:
        payload: dict[str, Any] = {
            "atoms": [[self.space.to_json(bundle), format_exact(value)] for bundle, value in self.atoms],
        }
        if self.budget_cap is not None:
            payload["budget"] = format_exact(self.budget_cap)
        return payload

    def describe(self) -> str:
        if self.space.is_multi_unit:
            return "(" + ",".join(format_exact(value) for value in self.unit_values()) + ")"
        return "; ".join(f"{self.space.label(bundle)}:{format_exact(value)}" for bundle, value in self.atoms) or "-"


def value_query(valuation: Valuation, bundle: Bundle) -> Fraction:
    """Free-disposal value of ``bundle`` under ``valuation``."""
    return valuation.value_query(bundle)


__all__ = ["Atom", "Valuation", "value_query"]
