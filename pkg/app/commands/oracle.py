"""``oracle``: optimal and fractional revenue of a scenario."""

from __future__ import annotations

from typing import Optional

import click

from app.repositories.scenarios import load_scenario
from app.schemas.report import OracleReport
from app.services.oracles.fractional import fractional_opt
from app.services.oracles.winner_determination import optimal_revenue

from .common import emit, format_option, out_option, translate_errors


@click.command("oracle")
@click.argument("scenario_path", type=click.Path(dir_okay=False))
@format_option("text")
@out_option
def oracle_command(scenario_path: str, fmt: str, out: Optional[str]) -> None:
    """Print the optimal revenue and the fractional relaxation for SCENARIO_PATH."""
    with translate_errors():
        scenario = load_scenario(scenario_path)
        solution = optimal_revenue(scenario.market)
        report = OracleReport(
            scenario_digest=scenario.digest,
            optimum=solution.value,
            allocation=solution.allocation.to_json(),
            allocation_label=solution.allocation.label(),
            fractional=fractional_opt(scenario.market),
        )
    emit(report, fmt, out)


__all__ = ["oracle_command"]
