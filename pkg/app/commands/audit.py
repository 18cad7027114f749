"""``audit``: search for a profitable unilateral misreport."""

from __future__ import annotations

import logging
from fractions import Fraction
from typing import Any, Dict, Optional

import click

from app.repositories.scenarios import load_scenario, save_scenario
from app.schemas.report import AuditReport
from app.schemas.scenario import Scenario, witness_scenario
from app.services.analysis.audit import (
    AuditMode,
    AuditVerdict,
    all_partition_tapes,
    audit_deterministic,
    audit_expectation_2x2,
    audit_universal,
)
from app.services.mechanisms.registry import get_mechanism
from common.errors import ContractError
from common.money import format_extended

from .common import (
    EXIT_VIOLATION,
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


def audit_scenario(
    scenario: Scenario,
    mechanism_id: str,
    mode: AuditMode,
    seed: Optional[int] = None,
    epsilon: Optional[Fraction] = None,
    all_partitions: bool = False,
    opponent_grid: bool = False,
    **options: Any,
) -> AuditVerdict:
    get_mechanism(mechanism_id)
    if all_partitions and mode is not AuditMode.UNIVERSAL:
        raise ContractError("--all-partitions applies to universal audits only")
    market = scenario.market
    if mode is AuditMode.DETERMINISTIC:
        tape = scenario.tape(resolve_seed(scenario, seed))
        return audit_deterministic(mechanism_id, market, opponent_grid=opponent_grid, tape=tape, **options)
    if mode is AuditMode.EXPECTATION:
        if mechanism_id != "rand2x2" or options:
            raise ContractError(f"expectation audits are defined for rand2x2 only, not {mechanism_id}")
        return audit_expectation_2x2(market, opponent_grid=opponent_grid)
    seed = resolve_seed(scenario, seed)
    tapes = all_partition_tapes(market.n, seed) if all_partitions else (scenario.tape(seed),)
    logger.info("universal audit of %s over %d tapes", mechanism_id, len(tapes))
    return audit_universal(
        mechanism_id,
        market,
        tapes,
        resolve_epsilon(scenario, epsilon),
        opponent_grid=opponent_grid,
        **options,
    )


def witness_payload(scenario: Scenario, verdict: AuditVerdict, epsilon: Optional[Fraction] = None) -> Dict[str, Any]:
    """Replayable scenario for the verdict's witness; the claim sits under ``audit``."""
    witness = verdict.witness
    if witness is None:
        raise ContractError("no witness to write: the audit found no violation")
    claim = {
        "mechanism": verdict.mechanism,
        "mode": verdict.mode.value,
        "bidder": witness.bidder,
        "truth": witness.truth.to_dict(),
        "truthful_utility": format_extended(witness.truthful_utility),
        "deviating_utility": format_extended(witness.deviating_utility),
    }
    if epsilon is not None and scenario.epsilon is None:
        scenario = Scenario(scenario.market, epsilon, scenario.seed, scenario.partition_labels, scenario.draws)
    return witness_scenario(scenario, witness.reported, claim, witness.tape)


@click.command("audit")
@click.argument("scenario_path", type=click.Path(dir_okay=False))
@click.argument("mechanism_id")
@click.argument("mode", type=click.Choice([member.value for member in AuditMode]))
@seed_option
@epsilon_option
@click.option("--all-partitions", is_flag=True, help="Universal mode: try every explicit partition labeling.")
@click.option("--opponent-grid", is_flag=True, help="Also vary the other bidders over the deviation grid.")
@click.option("--posted-price-charge", is_flag=True, help="framework-u: charge the posted price per item.")
@click.option("--witness-out", type=click.Path(dir_okay=False, writable=True), help="Write the witness scenario here.")
@format_option("text")
@out_option
def audit_command(
    scenario_path: str,
    mechanism_id: str,
    mode: str,
    seed: Optional[int],
    epsilon: Optional[Fraction],
    all_partitions: bool,
    opponent_grid: bool,
    posted_price_charge: bool,
    witness_out: Optional[str],
    fmt: str,
    out: Optional[str],
) -> None:
    """Audit MECHANISM_ID on SCENARIO_PATH in MODE; exits 1 when a violation is found."""
    options: Dict[str, Any] = {"posted_price_charge": True} if posted_price_charge else {}
    with translate_errors():
        scenario = load_scenario(scenario_path)
        verdict = audit_scenario(
            scenario,
            mechanism_id,
            AuditMode(mode),
            seed,
            epsilon,
            all_partitions,
            opponent_grid,
            **options,
        )
        if verdict.violation and witness_out:
            save_scenario(witness_out, witness_payload(scenario, verdict, epsilon))
    emit(AuditReport(verdict, scenario.digest), fmt, out)
    if verdict.violation:
        click.get_current_context().exit(EXIT_VIOLATION)


__all__ = ["audit_command", "audit_scenario", "witness_payload"]
