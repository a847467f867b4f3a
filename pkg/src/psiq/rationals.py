"""Exact rational arguments: reduction, classification, shift decomposition.

Rationals are plain :class:`fractions.Fraction` values, which are always in
lowest terms with a positive denominator.  Everything here is pure and exact;
no rounding ever happens in this module.
"""

from __future__ import annotations

import enum
import math
import re
from dataclasses import dataclass
from fractions import Fraction

__all__ = [
    "ArgumentClass",
    "PoleError",
    "ShiftDecomposition",
    "classify",
    "harmonic",
    "parse_rational",
    "reduce",
    "shift_decompose",
]


class PoleError(ValueError):
    """Raised when the digamma function is requested at a non-positive integer."""


class ArgumentClass(enum.Enum):
    """Mutually exclusive, exhaustive classes of rational arguments."""

    POLE = "pole"
    ONE = "one"
    POSITIVE_INTEGER = "positive_integer"
    UNIT_INTERVAL = "unit_interval"
    GREATER_THAN_ONE = "greater_than_one"
    NEGATIVE_NON_INTEGER = "negative_non_integer"


_RATIONAL_RE = re.compile(r"^(-?\d+)(?:/(\d+))?$")


def reduce(numerator: int, denominator: int) -> Fraction:
    """Return numerator/denominator in lowest terms, sign on the numerator.

    Raises ValueError ("undefined rational") for a zero denominator.
    """
    if denominator == 0:
        raise ValueError("undefined rational: denominator is zero")
    return Fraction(numerator, denominator)


def parse_rational(text: str) -> Fraction:
    """Parse the text form of a rational: optional '-', integer, optional '/integer'."""
    m = _RATIONAL_RE.match(text.strip())
    if m is None:
        raise ValueError(f"malformed rational: {text!r}")
    num = int(m.group(1))
    den = int(m.group(2)) if m.group(2) is not None else 1
    return reduce(num, den)


def classify(r: Fraction) -> ArgumentClass:
    """Classify a rational argument of the digamma function."""
    if r.denominator == 1:
        if r <= 0:
            return ArgumentClass.POLE
        if r == 1:
            return ArgumentClass.ONE
        return ArgumentClass.POSITIVE_INTEGER
    if r < 0:
        return ArgumentClass.NEGATIVE_NON_INTEGER
    if r < 1:
        return ArgumentClass.UNIT_INTERVAL
    return ArgumentClass.GREATER_THAN_ONE


@dataclass(frozen=True)
class ShiftDecomposition:
    """Reduction of an argument to a base in (0, 1] plus an exact correction.

    The defining identity is psi(input) = psi(base) + correction, obtained by
    applying psi(z+1) = psi(z) + 1/z exactly ``step_count`` times (downward for
    inputs above 1, upward for negative inputs).
    """

    base: Fraction
    correction: Fraction
    step_count: int


def shift_decompose(r: Fraction) -> ShiftDecomposition:
    """Decompose a non-pole rational as psi(r) = psi(base) + correction, base in (0,1]."""
    if classify(r) is ArgumentClass.POLE:
        raise PoleError("digamma pole at non-positive integer")
    if 0 < r <= 1:
        return ShiftDecomposition(base=r, correction=Fraction(0), step_count=0)
    if r > 1:
        n = math.ceil(r) - 1
        base = r - n
        correction = sum((Fraction(1, 1) / (base + k) for k in range(n)), Fraction(0))
        return ShiftDecomposition(base=base, correction=correction, step_count=n)
    # negative non-integer: shift upward into (0, 1)
    n = math.ceil(-r)
    base = r + n
    correction = -sum((Fraction(1, 1) / (r + k) for k in range(n)), Fraction(0))
    return ShiftDecomposition(base=base, correction=correction, step_count=n)


def harmonic(n: int) -> Fraction:
    """Exact harmonic number H_n = 1 + 1/2 + ... + 1/n."""
    if n < 1:
        raise ValueError("harmonic number requires n >= 1")
    return sum((Fraction(1, k) for k in range(1, n + 1)), Fraction(0))
