"""Size guards for the exhaustive oracles."""

from __future__ import annotations

from app.core.config import get_config
from common.errors import CapacityError
from common.items import ItemSpace


def ensure_capacity(space: ItemSpace) -> ItemSpace:
    """Reject item spaces the exact oracles cannot enumerate."""
    config = get_config()
    if space.is_multi_unit and space.size > config.MAX_UNITS:
        raise CapacityError(f"{space.size} units exceed the oracle limit of {config.MAX_UNITS}")
    if not space.is_multi_unit and space.size > config.MAX_HETEROGENEOUS_ITEMS:
        raise CapacityError(f"{space.size} items exceed the oracle limit of {config.MAX_HETEROGENEOUS_ITEMS}")
    return space


__all__ = ["ensure_capacity"]
