"""Expose the CLI subcommands."""

from app.commands.audit import audit_command
from app.commands.fixtures import paper_command
from app.commands.oracle import oracle_command
from app.commands.run import run_command
from app.commands.sweep import sweep_command

__all__ = ["audit_command", "oracle_command", "paper_command", "run_command", "sweep_command"]
