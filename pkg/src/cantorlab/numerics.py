"""Exact scalar arithmetic for the covering geometry.

Every geometric quantity in this package (scales, contraction ratios,
interval endpoints, cover counts) is a rational number or an integer.
Rationals are ``fractions.Fraction`` values: arbitrary-precision, always
in lowest terms, with a positive denominator and a total exact order.
Nothing in the geometric kernel ever rounds.

Rationals serialize as ``"p/q"`` strings (lowest terms; a bare integer
``"p"`` is accepted and emitted when the denominator is 1).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import InvalidInputError

__all__ = [
    "Rational",
    "LESS",
    "EQUAL",
    "GREATER",
    "reduce",
    "pow_scale",
    "cmp",
    "parse_rational",
    "format_rational",
    "ScalePower",
]

Rational = Fraction

LESS, EQUAL, GREATER = -1, 0, 1


def reduce(numerator: int, denominator: int) -> Fraction:
    """Lowest-terms rational equal to numerator/denominator.

    The sign is carried by the numerator; the denominator is positive.
    """
    if denominator == 0:
        raise InvalidInputError("zero denominator")
    return Fraction(numerator, denominator)


def pow_scale(q: Fraction, j: int) -> Fraction:
    """Exact value of q**j for a base q in (0, 1) and integer j >= 0."""
    if not 0 < q < 1:
        raise InvalidInputError(f"base must lie in (0, 1), got {q}")
    if j < 0:
        raise InvalidInputError(f"exponent must be non-negative, got {j}")
    return q**j


def cmp(a: Fraction, b: Fraction) -> int:
    """Exact total order: LESS (-1), EQUAL (0) or GREATER (1)."""
    if a < b:
        return LESS
    if a > b:
        return GREATER
    return EQUAL


def parse_rational(text: str) -> Fraction:
    """Parse a ``"p/q"`` or ``"p"`` string into an exact rational."""
    s = text.strip()
    try:
        if "/" in s:
            num, den = s.split("/", 1)
            return reduce(int(num.strip()), int(den.strip()))
        return Fraction(int(s))
    except (ValueError, ZeroDivisionError) as exc:
        raise InvalidInputError(f"not a rational: {text!r}") from exc


def format_rational(value: Fraction) -> str:
    """Render a rational as ``"p/q"`` in lowest terms (``"p"`` if integral)."""
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


@dataclass(frozen=True)
class ScalePower:
    """A scale expressed as base**exponent, evaluated exactly on demand.

    Keeps deep scales like q**90 symbolic until a concrete rational is
    needed, so exponent arithmetic never loses information.
    """

    base: Fraction
    exponent: int

    def __post_init__(self):
        if not 0 < self.base < 1:
            raise InvalidInputError(f"ScalePower base must lie in (0, 1), got {self.base}")
        if self.exponent < 0:
            raise InvalidInputError(f"ScalePower exponent must be >= 0, got {self.exponent}")

    def value(self) -> Fraction:
        return self.base**self.exponent

    def __str__(self) -> str:
        return f"({format_rational(self.base)})^{self.exponent}"
