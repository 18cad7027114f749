"""Computational services: oracles, mechanisms and analysis."""
