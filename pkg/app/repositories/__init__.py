"""Scenario and report storage."""

from app.repositories.scenarios import load_scenario, save_scenario, write_report

__all__ = ["load_scenario", "save_scenario", "write_report"]
