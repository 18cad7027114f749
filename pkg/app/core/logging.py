"""Logging setup for the command-line tools."""

from __future__ import annotations

import logging
import sys

LOG_FORMAT = "%(asctime)s %(levelname)s %(name)s: %(message)s"


def configure_logging(level: str | int = "WARNING") -> None:
    """Send logs to stderr; configure handlers only if nothing is configured yet."""
    root = logging.getLogger()
    if not root.handlers:
        logging.basicConfig(level=level, format=LOG_FORMAT, stream=sys.stderr)
    else:
        root.setLevel(level)


__all__ = ["LOG_FORMAT", "configure_logging"]
