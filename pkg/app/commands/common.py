"""Shared plumbing for the subcommands: error translation, options, output."""

from __future__ import annotations

from contextlib import contextmanager
from fractions import Fraction
from typing import Any, Callable, Iterator, Optional

import click

from app.core.config import get_config
from app.repositories.scenarios import write_report
from app.schemas.report import Report, ReportFormat, render
from app.schemas.scenario import Scenario
from common.errors import AuctionError, ScenarioParseError
from common.money import to_money

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_PARSE = 2
EXIT_CONTRACT = 3


class ParseFailure(click.ClickException):
    exit_code = EXIT_PARSE


class ContractFailure(click.ClickException):
    exit_code = EXIT_CONTRACT


@contextmanager
def translate_errors() -> Iterator[None]:
    """Turn domain exceptions into click failures carrying the documented exit codes."""
    try:
        yield
    except ScenarioParseError as exc:
        raise ParseFailure(str(exc)) from exc
    except AuctionError as exc:
        raise ContractFailure(f"{type(exc).__name__}: {exc}") from exc


class MoneyParam(click.ParamType):
    name = "money"

    def convert(self, value: Any, param: Optional[click.Parameter], ctx: Optional[click.Context]) -> Fraction:
        if isinstance(value, Fraction):
            return value
        try:
            return to_money(str(value))
        except ValueError:
            self.fail(f"{value!r} is not a decimal or p/q value", param, ctx)


MONEY = MoneyParam()


def format_option(default: str) -> Callable[[Callable[..., Any]], Callable[..., Any]]:
    return click.option(
        "--format",
        "fmt",
        type=click.Choice([member.value for member in ReportFormat]),
        default=default,
        show_default=True,
        help="Report format.",
    )


out_option = click.option("--out", type=click.Path(dir_okay=False, writable=True), help="Also write the report here.")
seed_option = click.option("--seed", type=int, help="Random seed (scenario value, else the configured default).")
epsilon_option = click.option("--epsilon", type=MONEY, help="Framework epsilon, decimal or p/q.")


def resolve_seed(scenario: Scenario, seed: Optional[int]) -> int:
    if seed is not None:
        return seed
    if scenario.seed is not None:
        return scenario.seed
    return get_config().DEFAULT_SEED


def resolve_epsilon(scenario: Scenario, epsilon: Optional[Fraction]) -> Fraction:
    if epsilon is not None:
        return epsilon
    if scenario.epsilon is not None:
        return scenario.epsilon
    return to_money(get_config().DEFAULT_EPSILON)


def emit(report: Report, fmt: str, out: Optional[str]) -> None:
    text = render(report, fmt)
    click.echo(text, nl=False)
    if out:
        write_report(out, text)


__all__ = [
    "EXIT_CONTRACT",
    "EXIT_OK",
    "EXIT_PARSE",
    "EXIT_VIOLATION",
    "MONEY",
    "ContractFailure",
    "MoneyParam",
    "ParseFailure",
    "emit",
    "epsilon_option",
    "format_option",
    "out_option",
    "resolve_epsilon",
    "resolve_seed",
    "seed_option",
    "translate_errors",
]
