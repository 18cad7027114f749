"""CLI application factory."""

from __future__ import annotations

from typing import Type

import click

from app.commands import audit_command, oracle_command, paper_command, run_command, sweep_command
from app.core.config import BaseConfig, set_config
from app.core.logging import configure_logging


def create_cli(config_object: Type[BaseConfig] | None = None) -> click.Group:
    """Activate a config, set up logging and assemble the command group."""
    config = set_config(config_object)
    configure_logging(config.LOG_LEVEL)

    @click.group(name="auctionlab")
    def cli() -> None:
        """Truthful auctions for value-maximizing bidders: run, audit, sweep."""

    for command in (run_command, audit_command, sweep_command, paper_command, oracle_command):
        cli.add_command(command)
    cli.add_command(paper_command, name="fixtures")
    return cli


__all__ = ["create_cli"]
