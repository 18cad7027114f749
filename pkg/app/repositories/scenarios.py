"""Reading scenario files and writing reports to disk."""

from __future__ import annotations

import json
import logging
from pathlib import Path
from typing import Any, Dict

from app.schemas.scenario import Scenario, parse_scenario
from common.errors import ScenarioParseError

logger = logging.getLogger(__name__)


def load_scenario(path: str | Path) -> Scenario:
    location = Path(path)
    try:
        text = location.read_text(encoding="utf-8")
    except OSError as exc:
        raise ScenarioParseError(f"{location}: cannot read scenario: {exc.strerror or exc}") from exc
    except UnicodeDecodeError as exc:
        raise ScenarioParseError(f"{location}: not UTF-8 text at byte {exc.start}") from exc
    scenario = parse_scenario(text, str(location))
    logger.debug("loaded %s: %d bidders over %s", location, scenario.market.n, scenario.market.items.describe())
    return scenario


def save_scenario(path: str | Path, payload: Dict[str, Any]) -> Path:
    location = Path(path)
    location.write_text(json.dumps(payload, indent=2, sort_keys=True) + "\n", encoding="utf-8")
    logger.info("wrote scenario %s", location)
    return location


def write_report(path: str | Path, text: str) -> Path:
    location = Path(path)
    location.write_text(text, encoding="utf-8")
    return location


__all__ = ["load_scenario", "save_scenario", "write_report"]
