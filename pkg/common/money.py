"""Exact money arithmetic.

Money is carried as :class:`fractions.Fraction` everywhere. Inputs come in as
ints, decimal literals or ``"p/q"`` strings and are converted without rounding;
floats are read through their shortest ``repr`` so ``10.1`` means 101/10.
"""

from __future__ import annotations

import math
from decimal import ROUND_HALF_EVEN, Decimal, localcontext
from fractions import Fraction
from numbers import Rational
from typing import Final, Union

Money = Fraction
MoneyLike = Union[int, str, Decimal, Fraction, float]
ExtendedMoney = Union[Fraction, float]

ZERO: Final = Fraction(0)
ONE: Final = Fraction(1)

# Utility of a value bidder who pays more than the bundle is worth.
NEG_INFINITY: Final = float("-inf")

# (sqrt(5) - 1) / 2, for display only; decisions use the quadratic forms below.
GOLDEN_RATIO_APPROX: Final = (math.sqrt(5) - 1) / 2


def to_money(value: MoneyLike) -> Fraction:
    """Convert ``value`` into an exact, finite Fraction."""
    if isinstance(value, bool):
        raise ValueError("booleans are not money")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (int, Rational)):
        return Fraction(value)
    if isinstance(value, Decimal):
        if not value.is_finite():
            raise ValueError(f"money must be finite, got {value}")
        return Fraction(value)
    if isinstance(value, float):
        if not math.isfinite(value):
            raise ValueError(f"money must be finite, got {value}")
        return Fraction(repr(value))
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"not a decimal or fraction: {value!r}") from exc
    raise ValueError(f"unsupported money type {type(value).__name__}")


def _decimal_exponent(value: Fraction) -> int | None:
    """Number of decimal places needed to write ``value`` exactly, if finite."""
    den = value.denominator
    twos = fives = 0
    while den % 2 == 0:
        den //= 2
        twos += 1
    while den % 5 == 0:
        den //= 5
        fives += 1
    if den != 1:
        return None
    return max(twos, fives)


def format_exact(value: Fraction) -> str:
    """Render money exactly: plain decimal when possible, ``p/q`` otherwise."""
    places = _decimal_exponent(value)
    if places is None:
        return f"{value.numerator}/{value.denominator}"
    if places == 0:
        return str(value.numerator)
    scaled = abs(value.numerator) * (10**places) // value.denominator
    sign = "-" if value < 0 else ""
    whole, frac = divmod(scaled, 10**places)
    digits = str(frac).rjust(places, "0").rstrip("0")
    return f"{sign}{whole}.{digits}" if digits else f"{sign}{whole}"


def format_decimal(value: ExtendedMoney, places: int = 6) -> str:
    """Fixed-point rendering, half-even rounded, independent of locale."""
    if isinstance(value, float):
        if value == NEG_INFINITY:
            return "-inf"
        value = to_money(value)
    with localcontext() as ctx:
        ctx.prec = 60
        quotient = Decimal(value.numerator) / Decimal(value.denominator)
        return str(quotient.quantize(Decimal(1).scaleb(-places), rounding=ROUND_HALF_EVEN))


def format_extended(value: ExtendedMoney) -> str:
    """Exact rendering that also covers the ``-inf`` utility marker."""
    if isinstance(value, float) and value == NEG_INFINITY:
        return "-inf"
    return format_exact(to_money(value))


def exceeds_golden_share(part: Fraction, whole: Fraction) -> bool:
    """Return ``part > r * whole`` for r = (sqrt(5) - 1) / 2, exactly.

    Valid for nonnegative arguments: r is the positive root of x^2 + x - 1,
    so the comparison is equivalent to ``part^2 + part*whole > whole^2``.
    """
    return part * part + part * whole > whole * whole


def at_least_golden_ratio(ratio: Fraction) -> bool:
    """Return ``ratio >= (sqrt(5) - 1) / 2`` for a nonnegative ratio."""
    return ratio * ratio + ratio >= 1


__all__ = [
    "ExtendedMoney",
    "GOLDEN_RATIO_APPROX",
    "Money",
    "MoneyLike",
    "NEG_INFINITY",
    "ONE",
    "ZERO",
    "at_least_golden_ratio",
    "exceeds_golden_share",
    "format_decimal",
    "format_exact",
    "format_extended",
    "to_money",
]
