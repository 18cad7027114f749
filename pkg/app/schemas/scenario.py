"""Scenario files: JSON text <-> markets plus run settings.

Money is read exactly: JSON numbers are parsed as decimals, and strings may
hold a decimal or an exact ``"p/q"`` fraction.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass
from decimal import Decimal
from fractions import Fraction
from typing import Any, Dict, List, Optional, Tuple

from common.errors import DomainError, ScenarioParseError
from common.items import ItemSpace
from common.market import Market
from common.money import format_exact, to_money
from common.tape import PartitionLabel, RandomTape
from common.valuation import Valuation

TOP_LEVEL_FIELDS = {"items", "bidders", "psb", "epsilon", "seed", "partition_labels", "draws", "audit"}


@dataclass(frozen=True)
class Scenario:
    market: Market
    epsilon: Optional[Fraction] = None
    seed: Optional[int] = None
    partition_labels: Optional[Tuple[PartitionLabel, ...]] = None
    draws: Tuple[Fraction, ...] = ()

    def tape(self, seed: int) -> RandomTape:
        return RandomTape(seed, self.draws, self.partition_labels)

    def to_dict(self) -> Dict[str, Any]:
        payload = self.market.to_dict()
        if self.epsilon is not None:
            payload["epsilon"] = format_exact(self.epsilon)
        if self.seed is not None:
            payload["seed"] = self.seed
        if self.partition_labels is not None:
            payload["partition_labels"] = [label.value for label in self.partition_labels]
        if self.draws:
            payload["draws"] = [format_exact(draw) for draw in self.draws]
        return payload

    @property
    def digest(self) -> str:
        return scenario_digest(self.to_dict())


def canonical_json(payload: Any) -> str:
    return json.dumps(payload, sort_keys=True, separators=(",", ":"), ensure_ascii=True)


def scenario_digest(payload: Dict[str, Any]) -> str:
    return hashlib.sha256(canonical_json(payload).encode("utf-8")).hexdigest()


class _Reader:
    """Field-path aware accessors that raise :class:`ScenarioParseError`."""

    def __init__(self, source: str):
        self.source = source

    def fail(self, path: str, message: str) -> ScenarioParseError:
        return ScenarioParseError(f"{self.source}: {path}: {message}")

    def money(self, raw: Any, path: str) -> Fraction:
        if isinstance(raw, bool) or not isinstance(raw, (int, Decimal, str)):
            raise self.fail(path, f"expected a decimal number or 'p/q' string, got {raw!r}")
        try:
            return to_money(raw)
        except ValueError as exc:
            raise self.fail(path, str(exc)) from exc

    def integer(self, raw: Any, path: str) -> int:
        if isinstance(raw, bool) or not isinstance(raw, int):
            raise self.fail(path, f"expected an integer, got {raw!r}")
        return raw

    def array(self, raw: Any, path: str) -> List[Any]:
        if not isinstance(raw, list):
            raise self.fail(path, f"expected an array, got {type(raw).__name__}")
        return raw

    def items(self, raw: Any) -> ItemSpace:
        if not isinstance(raw, dict) or len(raw) != 1:
            raise self.fail("items", 'expected {"multiunit": m} or {"heterogeneous": [names]}')
        kind, body = next(iter(raw.items()))
        try:
            if kind == "multiunit":
                return ItemSpace.multi_unit(self.integer(body, "items.multiunit"))
            if kind == "heterogeneous":
                names = self.array(body, "items.heterogeneous")
                for index, name in enumerate(names):
                    if not isinstance(name, str):
                        raise self.fail(f"items.heterogeneous[{index}]", "item names must be strings")
                return ItemSpace.heterogeneous(names)
        except DomainError as exc:
            raise self.fail(f"items.{kind}", str(exc)) from exc
        raise self.fail("items", f"unknown item kind {kind!r}")

    def bidder(self, space: ItemSpace, raw: Any, path: str) -> Valuation:
        if not isinstance(raw, dict):
            raise self.fail(path, "expected an object with 'atoms'")
        unknown = set(raw) - {"atoms", "budget"}
        if unknown:
            raise self.fail(path, f"unknown fields {sorted(unknown)}")
        atoms = []
        for index, atom in enumerate(self.array(raw.get("atoms"), f"{path}.atoms")):
            atom_path = f"{path}.atoms[{index}]"
            if not isinstance(atom, list) or len(atom) != 2:
                raise self.fail(atom_path, "expected [bundle, value]")
            try:
                bundle = space.from_json(atom[0])
            except DomainError as exc:
                raise self.fail(f"{atom_path}[0]", str(exc)) from exc
            atoms.append((bundle, self.money(atom[1], f"{atom_path}[1]")))
        budget = raw.get("budget")
        cap = self.money(budget, f"{path}.budget") if budget is not None else None
        try:
            return Valuation.from_atoms(space, atoms, cap)
        except DomainError as exc:
            raise self.fail(path, str(exc)) from exc


def parse_scenario(text: str, source: str = "<scenario>") -> Scenario:
    """Parse scenario JSON; errors name the line/column or the offending field."""
    try:
        raw = json.loads(text, parse_float=Decimal)
    except json.JSONDecodeError as exc:
        raise ScenarioParseError(f"{source}:{exc.lineno}:{exc.colno}: {exc.msg}") from exc
    reader = _Reader(source)
    if not isinstance(raw, dict):
        raise reader.fail("$", "expected a JSON object")
    unknown = set(raw) - TOP_LEVEL_FIELDS
    if unknown:
        raise reader.fail("$", f"unknown fields {sorted(unknown)}")
    if "items" not in raw or "bidders" not in raw:
        raise reader.fail("$", "both 'items' and 'bidders' are required")

    space = reader.items(raw["items"])
    bidders = reader.array(raw["bidders"], "bidders")
    valuations = tuple(reader.bidder(space, entry, f"bidders[{index}]") for index, entry in enumerate(bidders))
    psb = reader.integer(raw["psb"], "psb") if raw.get("psb") is not None else None
    try:
        market = Market(space, valuations, psb)
    except DomainError as exc:
        raise reader.fail("bidders", str(exc)) from exc

    epsilon = reader.money(raw["epsilon"], "epsilon") if raw.get("epsilon") is not None else None
    seed = reader.integer(raw["seed"], "seed") if raw.get("seed") is not None else None
    labels = None
    if raw.get("partition_labels") is not None:
        entries = reader.array(raw["partition_labels"], "partition_labels")
        try:
            labels = tuple(PartitionLabel(str(entry).lower()) for entry in entries)
        except ValueError as exc:
            raise reader.fail("partition_labels", f"labels are grand, fixed or stat: {exc}") from exc
        if len(labels) != market.n:
            raise reader.fail("partition_labels", f"{len(labels)} labels for {market.n} bidders")
    draws = tuple(
        reader.money(draw, f"draws[{index}]") for index, draw in enumerate(reader.array(raw.get("draws", []), "draws"))
    )
    for index, draw in enumerate(draws):
        if not 0 <= draw < 1:
            raise reader.fail(f"draws[{index}]", "draws must lie in [0, 1)")
    return Scenario(market, epsilon, seed, labels, draws)


def witness_scenario(
    scenario: Scenario,
    reported: Market,
    audit: Dict[str, Any],
    tape: Optional[RandomTape] = None,
) -> Dict[str, Any]:
    """Scenario payload for the misreported market, with the audit claim attached."""
    seed, labels = scenario.seed, scenario.partition_labels
    if tape is not None:
        seed, labels = tape.seed, tape.labels
    payload = Scenario(reported, scenario.epsilon, seed, labels, scenario.draws).to_dict()
    payload["audit"] = audit
    return payload


__all__ = [
    "Scenario",
    "canonical_json",
    "parse_scenario",
    "scenario_digest",
    "witness_scenario",
]
