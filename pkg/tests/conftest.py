"""Shared fixtures and independent test oracles.

The oracles here are deliberately separate from the package's own code
paths: pi comes from a scaled-integer Machin evaluation, gamma and digamma
references come from mpmath's builtin implementations (Brent-McMillan and
its own psi), which the package itself never calls.
"""

from __future__ import annotations

import random
from fractions import Fraction

import mpmath
import pytest

from psiq import ArgumentClass, EvalContext, classify


@pytest.fixture(scope="session")
def ctx30() -> EvalContext:
    return EvalContext(30)


@pytest.fixture(scope="session")
def ctx50() -> EvalContext:
    return EvalContext(50)


@pytest.fixture(scope="session")
def ctx60() -> EvalContext:
    return EvalContext(60)


def mp_reference(dps: int = 80):
    """A private mpmath context for reference values."""
    ctx = mpmath.mp.clone()
    ctx.dps = dps
    return ctx


def reference_digamma(r: Fraction, dps: int = 80):
    """Independent digamma oracle: mpmath's own implementation."""
    m = mp_reference(dps)
    return m.digamma(m.mpf(r.numerator) / r.denominator)


def machin_pi(digits: int):
    """pi by Machin's formula in scaled-integer arithmetic.

    Returns (value, scale) with value/scale = pi to within a few parts in
    10^-(digits+8); fully independent of mpmath's pi.
    """
    scale = 10 ** (digits + 10)

    def arctan_inv(x: int) -> int:
        total = 0
        power = x
        k = 0
        while True:
            term = scale // ((2 * k + 1) * power)
            if term == 0:
                break
            total += -term if k % 2 else term
            power *= x * x
            k += 1
        return total

    return 16 * arctan_inv(5) - 4 * arctan_inv(239), scale


def random_rationals(
    count: int,
    *,
    max_abs: int = 10,
    max_denominator: int = 24,
    seed: int = 20260809,
) -> list[Fraction]:
    """Deterministic sample of distinct non-pole rationals."""
    rng = random.Random(seed)
    out: list[Fraction] = []
    seen: set[Fraction] = set()
    while len(out) < count:
        den = rng.randint(1, max_denominator)
        num = rng.randint(-max_abs * den, max_abs * den)
        r = Fraction(num, den)
        if r in seen or classify(r) is ArgumentClass.POLE:
            continue
        seen.add(r)
        out.append(r)
    return out
