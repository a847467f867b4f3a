"""Acceptance suite: one test per criterion, each printing a PASS/FAIL line.

Run with ``pytest tests/test_acceptance.py -v -s`` to see the per-criterion
lines; the whole suite asserts every criterion at its stated tolerance.
"""

import json
import math
import time
from fractions import Fraction

from psiq import (
    EvalContext,
    const_gamma,
    const_pi,
    errata_gr,
    errata_jensen,
    eval_closed_form,
    format_decimal,
    oracle_psi_asymptotic,
    oracle_psi_series,
    psi_closed,
    render,
)
from psiq.cli import run
from psiq.expressions import eval_const_expr, parse_const_expr
from psiq.numerics import comparison_tolerance

from conftest import random_rationals

CTX50 = EvalContext(50)
TOL40 = CTX50.mp.mpf(10) ** -40

# the randomized argument set shared by criteria 3 and 4
SAMPLE = random_rationals(100, max_abs=10, max_denominator=24, seed=20260809)


def report(number: int, name: str, ok: bool, detail: str = "") -> None:
    status = "PASS" if ok else "FAIL"
    suffix = f"  ({detail})" if detail else ""
    print(f"ACCEPTANCE {number}: {name}: {status}{suffix}")


def test_criterion_1_table_reproduction(capsys):
    started = time.perf_counter()
    code = run(["table-check", "--digits", "60", "--format", "json"])
    elapsed = time.perf_counter() - started
    data = json.loads(capsys.readouterr().out)
    diffs = [float(case["absDiff"]) for case in data["cases"]]
    ok = (
        code == 0
        and data["summary"]["caseCount"] == 39
        and data["summary"]["allPass"] is True
        and max(diffs) < 1e-50
        and elapsed < 10.0
    )
    with capsys.disabled():
        report(1, "table reproduction (39 entries, 60 digits)", ok,
               f"max diff {max(diffs):.3g}, {elapsed:.2f}s")
    assert ok


def test_criterion_2_cross_formula_agreement(capsys):
    totient_sum = sum(
        1 for q in range(2, 41) for p in range(1, q) if math.gcd(p, q) == 1
    )
    started = time.perf_counter()
    code = run(["compare", "--qmax", "40", "--digits", "50", "--format", "json"])
    elapsed = time.perf_counter() - started
    data = json.loads(capsys.readouterr().out)
    max_diff = float(data["summary"]["maxAbsDiff"])
    # the sweep covers every reduced p/q with q <= 40: sum of totients = 489
    ok = (
        code == 0
        and data["summary"]["argumentCount"] == totient_sum == 489
        and data["summary"]["allPass"] is True
        and max_diff < 1e-40
        and elapsed < 60.0
    )
    with capsys.disabled():
        report(2, "cross-formula agreement (q <= 40, 50 digits)", ok,
               f"{data['summary']['argumentCount']} arguments, max diff {max_diff:.3g}, {elapsed:.2f}s")
    assert ok


def test_criterion_3_oracle_agreement(capsys):
    worst = CTX50.mp.mpf(0)
    for r in SAMPLE:
        diff = abs(
            eval_closed_form(psi_closed(r), CTX50) - oracle_psi_asymptotic(r, CTX50)
        )
        if diff > worst:
            worst = diff
    ok = worst < TOL40
    with capsys.disabled():
        report(3, "oracle agreement (100 randomized rationals)", ok,
               f"max diff {format_decimal(worst, 3)}")
    assert ok


def test_criterion_4_identity_suite(capsys):
    m = CTX50.mp
    pi = const_pi(CTX50)
    worst = m.mpf(0)
    checked = 0

    def psi(x):
        return eval_closed_form(psi_closed(x), CTX50)

    for r in SAMPLE:
        # recurrence: psi(r+1) = psi(r) + 1/r
        diff = abs(psi(r + 1) - psi(r) - CTX50.from_fraction(Fraction(1, 1) / r))
        worst = max(worst, diff)
        checked += 1
        if r.denominator > 1:  # reflection/negation poles excluded at integers
            cot = pi * m.cot(pi * CTX50.from_fraction(r))
            diff = abs(psi(1 - r) - psi(r) - cot)
            worst = max(worst, diff)
            diff = abs(psi(-r) - psi(r) - CTX50.from_fraction(Fraction(1, 1) / r) - cot)
            worst = max(worst, diff)
            checked += 2
    ok = worst < TOL40
    with capsys.disabled():
        report(4, "identity suite (recurrence, reflection, negation)", ok,
               f"{checked} identities, max residual {format_decimal(worst, 3)}")
    assert ok


def test_criterion_5_series_oracle_bound(capsys):
    ctx = EvalContext(30)
    ok = True
    details = []
    for r in (Fraction(1), Fraction(1, 2), Fraction(1, 3), Fraction(2, 3)):
        value, bound = oracle_psi_series(r, 10**6, ctx)
        gap = abs(value - oracle_psi_asymptotic(r, ctx))
        ok = ok and gap < bound + ctx.mp.mpf(10) ** -10 and bound < ctx.mp.mpf(10) ** -5
        details.append(f"psi({r}): gap {format_decimal(gap, 3)} <= bound {format_decimal(bound, 3)}")
    with capsys.disabled():
        report(5, "series oracle tail bound (N = 10^6)", ok, "; ".join(details))
    assert ok


def test_criterion_6_errata_jensen(capsys):
    rep = errata_jensen(CTX50)
    corrected = [c for c in rep.cases if c.formula_b.endswith("-jensen")]
    misprinted = [c for c in rep.cases if c.formula_b.endswith("-misprint")]
    ok = (
        len(corrected) == 2
        and len(misprinted) == 2
        and all(c.abs_diff < TOL40 for c in corrected)
        and all(c.abs_diff > CTX50.mp.mpf("0.001") for c in misprinted)
    )
    gap = min(c.abs_diff for c in misprinted)
    with capsys.disabled():
        report(6, "Jensen errata detection", ok,
               f"misprint gap {format_decimal(gap, 4)} > 1e-3; corrected match to 1e-40")
    assert ok


def test_criterion_7_errata_gr(capsys):
    code = run(["errata", "--qmax", "40", "--digits", "50"])
    rep = errata_gr(40, CTX50)
    text = rep.to_text()
    ok = (
        code == 0
        and rep.max_abs_diff < TOL40
        and "ln(sin(pi/2))" in text
        and "exactly zero" in text
    )
    with capsys.disabled():
        report(7, "GR 8.363(6) variant measurement (q <= 40)", ok,
               f"measured max {format_decimal(rep.max_abs_diff, 3)}")
    assert ok


def test_criterion_8_gamma_39_digits(capsys):
    text = format_decimal(const_gamma(EvalContext(39)), 39)
    expected = "0.577215664901532860606512090082402431042"
    ok = text == expected
    with capsys.disabled():
        report(8, "Euler constant string at 39 digits", ok, text)
    assert ok


def test_criterion_9_round_trip(capsys):
    ctx = EvalContext(30)
    tol = comparison_tolerance(ctx)
    worst = ctx.mp.mpf(0)
    forms = [psi_closed(r) for r in random_rationals(200, seed=97531)]
    for form in forms:
        direct = eval_closed_form(form, ctx)
        reparsed = eval_const_expr(parse_const_expr(render(form)), ctx)
        diff = abs(direct - reparsed)
        if diff > worst:
            worst = diff
    ok = worst < tol
    with capsys.disabled():
        report(9, "render/parse/evaluate round trip (200 forms)", ok,
               f"max diff {format_decimal(worst, 3)}")
    assert ok
