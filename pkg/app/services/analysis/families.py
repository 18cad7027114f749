"""Finite instance families for sweeps and property tests."""

from __future__ import annotations

import random
from fractions import Fraction
from itertools import combinations_with_replacement, product
from typing import Dict, List, Optional, Tuple

from common.items import ItemSpace
from common.market import Market
from common.valuation import Valuation


def monotone_vectors(units: int, top: int) -> List[Tuple[int, ...]]:
    """All nondecreasing ``(v(1), ..., v(units))`` with integer entries in ``0..top``."""
    return list(combinations_with_replacement(range(top + 1), units))


def _unit_valuations(space: ItemSpace, top: int) -> Dict[Tuple[int, ...], Valuation]:
    return {vector: Valuation.from_unit_values(space, vector) for vector in monotone_vectors(space.size, top)}


def two_by_two_grid(top: int, strict: bool = False) -> List[Market]:
    """Every 2x2 market with integer values up to ``top`` where bidder 0 is the strongest.

    Bidder 0 is designated the public strongest bidder; ``strict`` drops
    markets whose two-unit values tie.
    """
    space = ItemSpace.multi_unit(2)
    valuations = _unit_valuations(space, top)
    markets = []
    for strong, weak in product(valuations, repeat=2):
        if strong[1] < weak[1] or (strict and strong[1] == weak[1]):
            continue
        markets.append(Market(space, (valuations[strong], valuations[weak]), psb=0))
    return markets


def multi_unit_grid(bidders: int, units: int, top: int) -> List[Market]:
    """Markets of ``bidders`` monotone integer valuations, one per multiset of vectors."""
    space = ItemSpace.multi_unit(units)
    valuations = _unit_valuations(space, top)
    return [
        Market(space, tuple(valuations[vector] for vector in profile))
        for profile in combinations_with_replacement(list(valuations), bidders)
    ]


def flat_unit_family(bidders: int, units: int, step: Fraction, base: Fraction = Fraction(10)) -> Market:
    """Every bidder ``i`` values any nonempty bundle at ``base + (i + 1) * step``."""
    space = ItemSpace.multi_unit(units)
    return Market(space, tuple(Valuation.from_atoms(space, [(1, base + (index + 1) * step)]) for index in range(bidders)))


def random_markets(
    seed: int,
    count: int,
    max_bidders: int = 3,
    max_items: int = 4,
    strict: bool = False,
    heterogeneous: Optional[bool] = None,
    max_value: int = 20,
    max_atoms: int = 3,
) -> List[Market]:
    """Seeded random markets; ``strict`` makes every atom value in a market distinct.

    ``heterogeneous`` picks the item kind; ``None`` mixes both.
    """
    rng = random.Random(seed)
    markets = []
    for _ in range(count):
        bidders = rng.randint(1, max_bidders)
        size = rng.randint(1, max_items)
        distinct = heterogeneous if heterogeneous is not None else rng.random() < 0.5
        space = ItemSpace.heterogeneous([chr(ord("A") + k) for k in range(size)]) if distinct else ItemSpace.multi_unit(size)
        bundles = [bundle for bundle in space.bundles() if bundle]
        atom_counts = [rng.randint(1, min(max_atoms, len(bundles))) for _ in range(bidders)]
        if strict:
            pool = rng.sample(range(1, max(max_value, sum(atom_counts)) + 1), sum(atom_counts))
        else:
            pool = [rng.randint(0, max_value) for _ in range(sum(atom_counts))]
        valuations = []
        for atoms in atom_counts:
            chosen = rng.sample(bundles, atoms)
            values, pool = pool[:atoms], pool[atoms:]
            valuations.append(Valuation(space, tuple(zip(chosen, (Fraction(value) for value in values)))))
        markets.append(Market(space, tuple(valuations)))
    return markets


__all__ = [
    "flat_unit_family",
    "monotone_vectors",
    "multi_unit_grid",
    "random_markets",
    "two_by_two_grid",
]
