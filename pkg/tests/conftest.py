"""Shared pytest fixtures."""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any, Callable, Dict, Generator

import pytest
from click.testing import CliRunner
from hypothesis import HealthCheck, settings

from app import create_cli
from app.core.config import TestingConfig, set_config
from common.market import Market

settings.register_profile(
    "auctionlab",
    max_examples=60,
    deadline=None,
    suppress_health_check=[HealthCheck.function_scoped_fixture],
)
settings.load_profile("auctionlab")


@pytest.fixture(autouse=True)
def testing_config() -> Generator[None, None, None]:
    """Every test runs against the testing configuration."""
    set_config(TestingConfig)
    yield
    set_config(TestingConfig)


@pytest.fixture()
def runner() -> CliRunner:
    return CliRunner()


@pytest.fixture()
def cli() -> Any:
    """Command group built the way the entrypoint builds it."""
    return create_cli(TestingConfig)


@pytest.fixture()
def write_scenario(tmp_path: Path) -> Callable[[str, Dict[str, Any]], Path]:
    """Write a scenario payload to a temporary JSON file and return its path."""

    def _write(name: str, payload: Dict[str, Any]) -> Path:
        path = tmp_path / name
        path.write_text(json.dumps(payload, indent=2), encoding="utf-8")
        return path

    return _write


@pytest.fixture()
def strongest_known() -> Market:
    return Market.multi_unit([(64, 100), (55, 56)], psb=0)


@pytest.fixture()
def shading_market() -> Market:
    return Market.multi_unit([(10, 11), (10, 10)])


@pytest.fixture()
def strongest_known_payload() -> Dict[str, Any]:
    return {
        "items": {"multiunit": 2},
        "bidders": [
            {"atoms": [[1, 64], [2, 100]]},
            {"atoms": [[1, 55], [2, 56]]},
        ],
        "psb": 0,
    }


@pytest.fixture()
def shading_payload() -> Dict[str, Any]:
    return {
        "items": {"multiunit": 2},
        "bidders": [
            {"atoms": [[1, 10], [2, 11]]},
            {"atoms": [[1, 10], [2, 10]]},
        ],
    }
