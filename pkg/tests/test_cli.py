"""End-to-end tests for the command-line interface."""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any, Callable, Dict

from click.testing import CliRunner

from app.repositories.scenarios import load_scenario
from app.services.analysis.fixtures import FIXTURES

WriteScenario = Callable[[str, Dict[str, Any]], Path]


def _multi_unit(*rows: tuple, **extra: Any) -> Dict[str, Any]:
    payload: Dict[str, Any] = {
        "items": {"multiunit": max(len(row) for row in rows)},
        "bidders": [{"atoms": [[count, value] for count, value in enumerate(row, start=1)]} for row in rows],
    }
    payload.update(extra)
    return payload


def test_run_golden_on_the_strongest_known_instance(
    runner: CliRunner, cli: Any, write_scenario: WriteScenario, strongest_known_payload: Dict[str, Any]
) -> None:
    path = write_scenario("strongest.json", strongest_known_payload)
    result = runner.invoke(cli, ["run", str(path), "golden", "--format", "json"])
    assert result.exit_code == 0, result.output
    report = json.loads(result.stdout)
    assert report["allocation"] == [2, 0]
    assert report["payments"] == ["100", "0"]
    assert report["revenue"]["exact"] == "100"
    assert report["ratio"]["exact"] == "100/119"
    assert report["epsilon"] is None


def test_run_text_report(runner: CliRunner, cli: Any, write_scenario: WriteScenario, shading_payload: Dict[str, Any]) -> None:
    path = write_scenario("shading.json", shading_payload)
    result = runner.invoke(cli, ["run", str(path), "revmax"])
    assert result.exit_code == 0, result.output
    assert "allocation (1,1)" in result.stdout
    assert "revenue    20" in result.stdout


def test_run_on_an_empty_market(runner: CliRunner, cli: Any, write_scenario: WriteScenario) -> None:
    payload = {"items": {"multiunit": 2}, "bidders": [{"atoms": []}, {"atoms": []}]}
    path = write_scenario("empty.json", payload)
    result = runner.invoke(cli, ["run", str(path), "po", "--format", "json"])
    assert result.exit_code == 0, result.output
    report = json.loads(result.stdout)
    assert report["revenue"]["exact"] == "0"
    assert report["ratio"]["exact"] == "1"


def test_run_json_is_byte_identical_across_runs(runner: CliRunner, cli: Any, write_scenario: WriteScenario) -> None:
    path = write_scenario("posted.json", _multi_unit((5, 8), (4, 6), (3, 3), seed=7))
    first = runner.invoke(cli, ["run", str(path), "framework-u", "--format", "json"])
    second = runner.invoke(cli, ["run", str(path), "framework-u", "--format", "json"])
    assert first.exit_code == second.exit_code == 0, first.output
    assert first.stdout == second.stdout
    report = json.loads(first.stdout)
    assert report["seed"] == 7
    assert report["epsilon"] == "0.5"


def test_run_writes_the_report_file(
    runner: CliRunner, cli: Any, write_scenario: WriteScenario, shading_payload: Dict[str, Any], tmp_path: Path
) -> None:
    path = write_scenario("shading.json", shading_payload)
    out = tmp_path / "report.csv"
    result = runner.invoke(cli, ["run", str(path), "po", "--format", "csv", "--out", str(out)])
    assert result.exit_code == 0, result.output
    assert out.read_text(encoding="utf-8") == result.stdout
    assert result.stdout.splitlines()[0] == "bidder,bundle,payment,payment_decimal"


def test_audit_writes_a_replayable_witness(
    runner: CliRunner, cli: Any, write_scenario: WriteScenario, shading_payload: Dict[str, Any], tmp_path: Path
) -> None:
    path = write_scenario("shading.json", shading_payload)
    witness_path = tmp_path / "witness.json"
    result = runner.invoke(cli, ["audit", str(path), "revmax", "det", "--witness-out", str(witness_path)])
    assert result.exit_code == 1, result.output
    assert "violation" in result.stdout

    payload = json.loads(witness_path.read_text(encoding="utf-8"))
    assert payload["audit"]["bidder"] == 0
    assert payload["audit"]["deviating_utility"] == "11"
    assert load_scenario(witness_path).market.valuations[0].unit_values() == (0, 11)

    replay = runner.invoke(cli, ["run", str(witness_path), "revmax", "--format", "json"])
    assert replay.exit_code == 0, replay.output
    assert json.loads(replay.stdout)["allocation"] == [2, 0]


def test_det_audit_uses_the_scenario_draws(
    runner: CliRunner, cli: Any, write_scenario: WriteScenario, tmp_path: Path
) -> None:
    clean = write_scenario("tie75.json", _multi_unit((7, 10), (4, 10), psb=0, draws=["0.75"]))
    result = runner.invoke(cli, ["audit", str(clean), "golden", "det"])
    assert result.exit_code == 0, result.output

    lucky = write_scenario("tie25.json", _multi_unit((7, 10), (4, 10), psb=0, draws=["0.25"]))
    witness_path = tmp_path / "tie-witness.json"
    result = runner.invoke(cli, ["audit", str(lucky), "golden", "det", "--witness-out", str(witness_path)])
    assert result.exit_code == 1, result.output
    payload = json.loads(witness_path.read_text(encoding="utf-8"))
    assert payload["draws"] == ["0.25"]
    assert payload["audit"]["deviating_utility"] == "10"

    replay = runner.invoke(cli, ["run", str(witness_path), "golden", "--format", "json"])
    assert replay.exit_code == 0, replay.output
    assert json.loads(replay.stdout)["allocation"] == [2, 0]


def test_audit_of_a_truthful_mechanism_exits_zero(
    runner: CliRunner, cli: Any, write_scenario: WriteScenario, shading_payload: Dict[str, Any]
) -> None:
    path = write_scenario("shading.json", shading_payload)
    result = runner.invoke(cli, ["audit", str(path), "po", "det", "--format", "json"])
    assert result.exit_code == 0, result.output
    assert json.loads(result.stdout)["status"] == "no_violation_found"


def test_universal_audit_over_every_labeling(runner: CliRunner, cli: Any, write_scenario: WriteScenario) -> None:
    path = write_scenario("posted.json", _multi_unit((5, 8), (4, 6), (3, 3)))
    result = runner.invoke(
        cli, ["audit", str(path), "framework-u", "universal", "--all-partitions", "--epsilon", "1/2"]
    )
    assert result.exit_code == 0, result.output
    assert "no_violation_found" in result.stdout


def test_all_partitions_needs_universal_mode(
    runner: CliRunner, cli: Any, write_scenario: WriteScenario, shading_payload: Dict[str, Any]
) -> None:
    path = write_scenario("shading.json", shading_payload)
    result = runner.invoke(cli, ["audit", str(path), "po", "det", "--all-partitions"])
    assert result.exit_code == 3


def test_expectation_audit_only_for_the_lottery(
    runner: CliRunner, cli: Any, write_scenario: WriteScenario, strongest_known_payload: Dict[str, Any]
) -> None:
    path = write_scenario("strongest.json", strongest_known_payload)
    result = runner.invoke(cli, ["audit", str(path), "golden", "expectation"])
    assert result.exit_code == 3
    assert "ContractError" in result.output

    lottery = write_scenario("lottery.json", _multi_unit((60, 100), (50, 50)))
    result = runner.invoke(cli, ["audit", str(lottery), "rand2x2", "expectation"])
    assert result.exit_code == 0, result.output


def test_malformed_json_exits_with_parse_code(runner: CliRunner, cli: Any, tmp_path: Path) -> None:
    path = tmp_path / "broken.json"
    path.write_text("{", encoding="utf-8")
    result = runner.invoke(cli, ["run", str(path), "po"])
    assert result.exit_code == 2
    assert f"{path}:1:" in result.output


def test_bad_bundle_names_its_field(runner: CliRunner, cli: Any, write_scenario: WriteScenario) -> None:
    payload = {"items": {"multiunit": 2}, "bidders": [{"atoms": [[3, 5]]}]}
    path = write_scenario("bad.json", payload)
    result = runner.invoke(cli, ["run", str(path), "po"])
    assert result.exit_code == 2
    assert "bidders[0].atoms[0][0]" in result.output


def test_missing_scenario_file(runner: CliRunner, cli: Any, tmp_path: Path) -> None:
    result = runner.invoke(cli, ["run", str(tmp_path / "nowhere.json"), "po"])
    assert result.exit_code == 2


def test_non_utf8_scenario_exits_with_parse_code(runner: CliRunner, cli: Any, tmp_path: Path) -> None:
    path = tmp_path / "binary.json"
    path.write_bytes(b"\xff{}")
    result = runner.invoke(cli, ["run", str(path), "po"])
    assert result.exit_code == 2
    assert "not UTF-8" in result.output


def test_precondition_failure_exits_three(
    runner: CliRunner, cli: Any, write_scenario: WriteScenario, shading_payload: Dict[str, Any]
) -> None:
    path = write_scenario("shading.json", shading_payload)
    result = runner.invoke(cli, ["run", str(path), "golden"])
    assert result.exit_code == 3
    assert "PreconditionError" in result.output


def test_unknown_mechanism_exits_three(
    runner: CliRunner, cli: Any, write_scenario: WriteScenario, shading_payload: Dict[str, Any]
) -> None:
    path = write_scenario("shading.json", shading_payload)
    result = runner.invoke(cli, ["run", str(path), "vcg"])
    assert result.exit_code == 3


def test_bad_money_option_is_a_usage_error(
    runner: CliRunner, cli: Any, write_scenario: WriteScenario, shading_payload: Dict[str, Any]
) -> None:
    path = write_scenario("shading.json", shading_payload)
    result = runner.invoke(cli, ["run", str(path), "framework-u", "--epsilon", "half"])
    assert result.exit_code == 2


def test_sweep_csv_ends_with_the_minimum(runner: CliRunner, cli: Any) -> None:
    result = runner.invoke(cli, ["sweep", "golden", "--k", "20"])
    assert result.exit_code == 0, result.output
    lines = result.stdout.splitlines()
    assert lines[0] == "instance,market,ratio,ratio_decimal"
    assert lines[-1].startswith("min,")


def test_sweep_rejects_bad_shapes(runner: CliRunner, cli: Any) -> None:
    assert runner.invoke(cli, ["sweep", "golden", "--n", "3"]).exit_code == 3
    assert runner.invoke(cli, ["sweep", "po", "--k", "-1"]).exit_code == 3


def test_paper_command_and_its_alias(runner: CliRunner, cli: Any) -> None:
    for name in ("paper", "fixtures"):
        result = runner.invoke(cli, [name])
        assert result.exit_code == 0, result.output
        assert f"{len(FIXTURES)}/{len(FIXTURES)} fixtures passed" in result.stdout


def test_oracle_command(
    runner: CliRunner, cli: Any, write_scenario: WriteScenario, strongest_known_payload: Dict[str, Any]
) -> None:
    path = write_scenario("strongest.json", strongest_known_payload)
    result = runner.invoke(cli, ["oracle", str(path), "--format", "json"])
    assert result.exit_code == 0, result.output
    report = json.loads(result.stdout)
    assert report["optimal_revenue"]["exact"] == "119"
    assert report["allocation"] == [1, 1]
