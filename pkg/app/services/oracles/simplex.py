"""Exact tableau simplex over rationals.

Solves ``maximize c.x subject to A x <= b, x >= 0`` with ``b >= 0``, so the
slack basis is a feasible starting vertex and no phase-one is needed. Bland's
rule (lowest-index entering column, lowest-index leaving basis variable)
guarantees termination without any numeric tolerance.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from common.errors import ContractError
from common.money import ZERO, MoneyLike, to_money

logger = logging.getLogger(__name__)


class Resolution(str, Enum):
    PENDING = "pending"
    SOLVED = "solved"
    UNBOUNDED = "unbounded"


@dataclass(frozen=True)
class LinearProgramSolution:
    value: Fraction
    point: Tuple[Fraction, ...]
    pivots: int


class SimplexTableau:
    """Dense tableau with the slack variables appended after the originals."""

    def __init__(self, a: Sequence[Sequence[MoneyLike]], b: Sequence[MoneyLike], c: Sequence[MoneyLike]):
        if len(a) != len(b):
            raise ContractError(f"{len(a)} constraint rows but {len(b)} bounds")
        width = len(c)
        for index, row in enumerate(a):
            if len(row) != width:
                raise ContractError(f"constraint row {index} has {len(row)} coefficients, expected {width}")
        self.n = width
        self.m = len(b)
        self.b: List[Fraction] = [to_money(value) for value in b]
        if any(value < 0 for value in self.b):
            raise ContractError("constraint bounds must be nonnegative")
        slack = [[Fraction(int(i == j)) for j in range(self.m)] for i in range(self.m)]
        self.a: List[List[Fraction]] = [[to_money(value) for value in row] + slack[i] for i, row in enumerate(a)]
        # reduced costs of the minimisation form
        self.c: List[Fraction] = [-to_money(value) for value in c] + [ZERO] * self.m
        self.value = ZERO
        self.basis: List[int] = [self.n + i for i in range(self.m)]
        self.resolution = Resolution.PENDING
        self.pivots = 0

    def _entering_column(self) -> Optional[int]:
        for column, cost in enumerate(self.c):
            if cost < 0:
                return column
        return None

    def _leaving_row(self, column: int) -> Optional[int]:
        best_row: Optional[int] = None
        best_ratio: Optional[Fraction] = None
        for row in range(self.m):
            coefficient = self.a[row][column]
            if coefficient <= 0:
                continue
            ratio = self.b[row] / coefficient
            if (
                best_ratio is None
                or ratio < best_ratio
                or (ratio == best_ratio and self.basis[row] < self.basis[best_row])  # type: ignore[index]
            ):
                best_row, best_ratio = row, ratio
        return best_row

    def _pivot(self, row: int, column: int) -> None:
        pivot = self.a[row][column]
        pivot_row = [value / pivot for value in self.a[row]]
        self.a[row] = pivot_row
        self.b[row] /= pivot
        for other in range(self.m):
            if other == row:
                continue
            factor = self.a[other][column]
            if factor:
                self.a[other] = [value - factor * lead for value, lead in zip(self.a[other], pivot_row)]
                self.b[other] -= factor * self.b[row]
        factor = self.c[column]
        if factor:
            self.c = [value - factor * lead for value, lead in zip(self.c, pivot_row)]
            self.value -= factor * self.b[row]
        self.basis[row] = column
        self.pivots += 1

    def step(self) -> bool:
        column = self._entering_column()
        if column is None:
            self.resolution = Resolution.SOLVED
            return False
        row = self._leaving_row(column)
        if row is None:
            self.resolution = Resolution.UNBOUNDED
            return False
        self._pivot(row, column)
        return True

    def vertex(self) -> Tuple[Fraction, ...]:
        point = [ZERO] * (self.n + self.m)
        for row, variable in enumerate(self.basis):
            point[variable] = self.b[row]
        return tuple(point[: self.n])


def maximize(
    c: Sequence[MoneyLike],
    a: Sequence[Sequence[MoneyLike]],
    b: Sequence[MoneyLike],
) -> LinearProgramSolution:
    """Optimal value and vertex of ``max c.x, A x <= b, x >= 0``."""
    tableau = SimplexTableau(a, b, c)
    while tableau.step():
        pass
    if tableau.resolution is Resolution.UNBOUNDED:
        raise ContractError("linear program is unbounded")
    logger.debug("simplex solved %dx%d program in %d pivots", tableau.m, tableau.n, tableau.pivots)
    return LinearProgramSolution(tableau.value, tableau.vertex(), tableau.pivots)


__all__ = ["LinearProgramSolution", "Resolution", "SimplexTableau", "maximize"]
