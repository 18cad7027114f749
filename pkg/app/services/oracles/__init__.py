"""Exact revenue benchmarks."""

from app.services.oracles.capacity import ensure_capacity
from app.services.oracles.fractional import fractional_opt, fractional_value
from app.services.oracles.pareto import pareto_dominated
from app.services.oracles.simplex import LinearProgramSolution, maximize
from app.services.oracles.winner_determination import (
    OptimalSolution,
    allocation_value,
    candidate_bundles,
    feasible_allocations,
    naive_optimal_revenue,
    optimal_revenue,
)

__all__ = [
    "LinearProgramSolution",
    "OptimalSolution",
    "allocation_value",
    "candidate_bundles",
    "ensure_capacity",
    "feasible_allocations",
    "fractional_opt",
    "fractional_value",
    "maximize",
    "naive_optimal_revenue",
    "optimal_revenue",
    "pareto_dominated",
]
