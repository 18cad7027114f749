"""``sweep``: worst-case ratio of a mechanism over a finite market grid."""

from __future__ import annotations

from fractions import Fraction
from typing import List, Optional

import click

from app.schemas.report import SweepReport
from app.services.analysis.families import multi_unit_grid, two_by_two_grid
from app.services.analysis.ratios import worst_case_sweep
from app.services.mechanisms.registry import get_mechanism
from common.errors import ContractError
from common.market import Market

from .common import emit, epsilon_option, format_option, out_option, translate_errors

TWO_BY_TWO_MECHANISMS = ("golden", "rand2x2")


def sweep_family(mechanism_id: str, top: int, bidders: int = 2, units: int = 2, strict: bool = False) -> List[Market]:
    """Integer grid with values in ``0..top``; 2x2 mechanisms get the PSB grid."""
    get_mechanism(mechanism_id)
    if top < 0:
        raise ContractError(f"--k must be non-negative, got {top}")
    if mechanism_id in TWO_BY_TWO_MECHANISMS:
        if (bidders, units) != (2, 2):
            raise ContractError(f"{mechanism_id} is defined on 2 bidders and 2 units only")
        return two_by_two_grid(top, strict=strict or mechanism_id == "rand2x2")
    return multi_unit_grid(bidders, units, top)


@click.command("sweep")
@click.argument("mechanism_id")
@click.option("--k", "top", type=int, default=20, show_default=True, help="Largest integer value in the grid.")
@click.option("--n", "bidders", type=int, default=2, show_default=True, help="Number of bidders.")
@click.option("--m", "units", type=int, default=2, show_default=True, help="Number of identical units.")
@click.option("--expectation", is_flag=True, help="Use exact expected revenue (rand2x2).")
@click.option("--strict", is_flag=True, help="Drop markets whose two-unit values tie.")
@epsilon_option
@click.option("--workers", type=int, help="Worker processes (default from config).")
@format_option("csv")
@out_option
def sweep_command(
    mechanism_id: str,
    top: int,
    bidders: int,
    units: int,
    expectation: bool,
    strict: bool,
    epsilon: Optional[Fraction],
    workers: Optional[int],
    fmt: str,
    out: Optional[str],
) -> None:
    """Minimum revenue/optimum ratio of MECHANISM_ID over an integer grid."""
    with translate_errors():
        family = sweep_family(mechanism_id, top, bidders, units, strict)
        result = worst_case_sweep(
            mechanism_id,
            family,
            epsilon,
            expectation=True if expectation else None,
            workers=workers,
        )
    emit(SweepReport(result), fmt, out)


__all__ = ["sweep_command", "sweep_family"]
