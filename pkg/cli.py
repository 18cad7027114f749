"""Command-line entrypoint."""

from __future__ import annotations

from app import create_cli

cli = create_cli()

__all__ = ["cli"]

if __name__ == "__main__":
    cli()
