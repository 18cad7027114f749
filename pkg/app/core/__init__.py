"""Configuration and logging setup."""

from app.core.config import BaseConfig, DevelopmentConfig, ProductionConfig, TestingConfig, get_config, set_config
from app.core.logging import configure_logging

__all__ = [
    "BaseConfig",
    "DevelopmentConfig",
    "ProductionConfig",
    "TestingConfig",
    "configure_logging",
    "get_config",
    "set_config",
]
