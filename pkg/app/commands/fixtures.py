"""``paper``: the reference instance suite, also reachable as ``fixtures``."""

from __future__ import annotations

from typing import Optional

import click

from app.schemas.report import FixtureReport
from app.services.analysis.fixtures import reference_fixtures

from .common import EXIT_VIOLATION, emit, format_option, out_option


@click.command("paper")
@format_option("text")
@out_option
def paper_command(fmt: str, out: Optional[str]) -> None:
    """Run every reference fixture; exits 1 if any deviates."""
    report = FixtureReport(reference_fixtures())
    emit(report, fmt, out)
    if not report.passed:
        click.get_current_context().exit(EXIT_VIOLATION)


__all__ = ["paper_command"]
