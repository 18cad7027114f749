"""Application configuration objects."""

from __future__ import annotations

import os
from typing import Type


class BaseConfig:
    """Base configuration shared across environments."""

    MAX_HETEROGENEOUS_ITEMS = int(os.getenv("AUCTIONLAB_MAX_ITEMS", "12"))
    MAX_UNITS = int(os.getenv("AUCTIONLAB_MAX_UNITS", "64"))
    DEFAULT_SEED = 0
    DEFAULT_EPSILON = "1/2"
    SCALE_FACTORS = ("0", "1/2", "9/10", "11/10", "2")
    SMALL_MARKET_BUNDLES = 3
    SWEEP_WORKERS = int(os.getenv("AUCTIONLAB_SWEEP_WORKERS", "1"))
    DECIMAL_PLACES = 6
    LOG_LEVEL = os.getenv("AUCTIONLAB_LOG_LEVEL", "WARNING")


class DevelopmentConfig(BaseConfig):
    """Config for local experiments."""

    LOG_LEVEL = os.getenv("AUCTIONLAB_LOG_LEVEL", "DEBUG")


class ProductionConfig(BaseConfig):
    """Config for batch sweeps and CI runs."""


class TestingConfig(BaseConfig):
    """Config for the test-suite: single process, quiet logs."""

    SWEEP_WORKERS = 1


_active: Type[BaseConfig] = ProductionConfig


def get_config() -> Type[BaseConfig]:
    """Return the active configuration class."""
    return _active


def set_config(config_object: Type[BaseConfig] | None) -> Type[BaseConfig]:
    """Activate ``config_object`` (``ProductionConfig`` when ``None``)."""
    global _active
    _active = config_object or ProductionConfig
    return _active


__all__ = [
    "BaseConfig",
    "DevelopmentConfig",
    "ProductionConfig",
    "TestingConfig",
    "get_config",
    "set_config",
]
