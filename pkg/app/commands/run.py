"""``run``: one mechanism on one scenario."""

from __future__ import annotations

import logging
from fractions import Fraction
from typing import Any, Dict, Optional

import click

from app.repositories.scenarios import load_scenario
from app.schemas.report import RunReport
from app.schemas.scenario import Scenario
from app.services.mechanisms.registry import get_mechanism, run_mechanism
from app.services.oracles.winner_determination import optimal_revenue
from common.money import ONE

from .common import (
    emit,
    epsilon_option,
    format_option,
    out_option,
    resolve_epsilon,
    resolve_seed,
    seed_option,
    translate_errors,
)

logger = logging.getLogger(__name__)


def run_scenario(
    scenario: Scenario,
    mechanism_id: str,
    seed: Optional[int] = None,
    epsilon: Optional[Fraction] = None,
    **options: Any,
) -> RunReport:
    get_mechanism(mechanism_id)
    seed = resolve_seed(scenario, seed)
    epsilon = resolve_epsilon(scenario, epsilon)
    result = run_mechanism(mechanism_id, scenario.market, epsilon, scenario.tape(seed), **options)
    optimum = optimal_revenue(scenario.market).value
    revenue = result.revenue
    logger.info("%s on %s: revenue %s of %s", mechanism_id, scenario.digest[:12], revenue, optimum)
    return RunReport(
        mechanism=mechanism_id,
        scenario_digest=scenario.digest,
        seed=seed,
        epsilon=epsilon if get_mechanism(mechanism_id).randomized else None,
        outcome=result.outcome,
        revenue=revenue,
        optimum=optimum,
        ratio=ONE if optimum == 0 else revenue / optimum,
        trace=result.trace,
    )


@click.command("run")
@click.argument("scenario_path", type=click.Path(dir_okay=False))
@click.argument("mechanism_id")
@seed_option
@epsilon_option
@click.option("--posted-price-charge", is_flag=True, help="framework-u: charge the posted price per item.")
@format_option("text")
@out_option
def run_command(
    scenario_path: str,
    mechanism_id: str,
    seed: Optional[int],
    epsilon: Optional[Fraction],
    posted_price_charge: bool,
    fmt: str,
    out: Optional[str],
) -> None:
    """Run MECHANISM_ID on the scenario at SCENARIO_PATH."""
    options: Dict[str, Any] = {"posted_price_charge": True} if posted_price_charge else {}
    with translate_errors():
        scenario = load_scenario(scenario_path)
        report = run_scenario(scenario, mechanism_id, seed, epsilon, **options)
    emit(report, fmt, out)


__all__ = ["run_command", "run_scenario"]
