"""Exact symbolic closed forms for digamma values.

A :class:`ClosedForm` maps irreducible basis constants (1, the Euler constant,
pi*cot(pi*x), ln p for prime p, ln sin(pi*x)) to coefficients drawn from an
exact ring of rational cosine combinations: q0 + sum_i q_i * cos(2*pi*a_i)
with all q_i and a_i rational.  The ring is closed under multiplication via
the product-to-sum identity, so coefficients such as 2*cos(2*pi*p*j/q) stay
exact without any floating point.

Canonical conventions:

* cosine angles are folded into [0, 1/2] using periodicity and
  cos(2*pi*(1-x)) = cos(2*pi*x); cos(0) = 1 and cos(pi) = -1 are absorbed
  into the rational part, so stored angles lie strictly in (0, 1/2);
* pi*cot(pi*x) angles are folded into (0, 1/2] using
  cot(pi*(1-x)) = -cot(pi*x); the x = 1/2 term is exactly zero and is deleted;
* ln sin(pi*x) angles are folded into (0, 1/2] using
  sin(pi*(1-x)) = sin(pi*x); the x = 1/2 term is ln 1 = 0 and is deleted;
* logarithms of integers are decomposed over primes, so ln(2q) and ln 12
  compare structurally.

Structural equality of canonical forms implies numeric equality.  The
converse does not hold: the cosine angles are linearly dependent over the
rationals (e.g. sum of cos(2*pi*j/q) over j = 1..q-1 equals -1), so value
equality of structurally different forms is checked numerically via
:func:`equals_numeric`.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Union

__all__ = [
    "BasisTerm",
    "ClosedForm",
    "CosineCombination",
    "GAMMA",
    "UNIT",
    "canonicalize",
    "combine",
    "equals_numeric",
    "factor_log_integer",
    "log_prime",
    "log_sin",
    "pi_cot",
    "render",
    "scale",
    "unit_form",
]

_HALF = Fraction(1, 2)
_QUARTER = Fraction(1, 4)

Scalar = Union[int, Fraction]


def _as_fraction(x: Scalar) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


# ---------------------------------------------------------------------------
# Cosine-combination coefficient ring
# ---------------------------------------------------------------------------


def _fold_cos_angle(angle: Fraction) -> Fraction:
    """Fold an angle (in full turns) into [0, 1/2] for cos(2*pi*angle)."""
    a = angle % 1
    if a > _HALF:
        a = 1 - a
    return a


@dataclass(frozen=True)
class CosineCombination:
    """rational + sum of coeff*cos(2*pi*angle) with rational coeffs and angles.

    ``cosines`` is a sorted tuple of (angle, coeff) pairs with angles strictly
    inside (0, 1/2) and no zero coefficients; the quarter turn never appears
    because cos(pi/2) = 0 exactly.  Instances are immutable and canonical by
    construction.
    """

    rational: Fraction = Fraction(0)
    cosines: tuple[tuple[Fraction, Fraction], ...] = ()

    def __post_init__(self) -> None:
        for angle, coeff in self.cosines:
            if not (0 < angle < _HALF) or angle == _QUARTER:
                raise ValueError(f"non-canonical cosine angle {angle}")
            if coeff == 0:
                raise ValueError("zero cosine coefficient stored")

    @staticmethod
    def _build(rational: Fraction, acc: dict[Fraction, Fraction]) -> "CosineCombination":
        cleaned = tuple(sorted((a, c) for a, c in acc.items() if c != 0))
        return CosineCombination(rational, cleaned)

    @classmethod
    def from_rational(cls, value: Scalar) -> "CosineCombination":
        return cls(_as_fraction(value), ())

    @classmethod
    def from_cos(cls, angle: Fraction, coeff: Scalar = 1) -> "CosineCombination":
        """The combination coeff*cos(2*pi*angle), angle folded canonically."""
        c = _as_fraction(coeff)
        if c == 0:
            return cls()
        a = _fold_cos_angle(angle)
        if a == 0:
            return cls(c, ())
        if a == _HALF:
            return cls(-c, ())
        if a == _QUARTER:
            return cls()
        return cls(Fraction(0), ((a, c),))

    @property
    def is_zero(self) -> bool:
        return self.rational == 0 and not self.cosines

    @property
    def is_rational(self) -> bool:
        return not self.cosines

    def __add__(self, other: "CosineCombination") -> "CosineCombination":
        acc = dict(self.cosines)
        for a, c in other.cosines:
            acc[a] = acc.get(a, Fraction(0)) + c
        return self._build(self.rational + other.rational, acc)

    def __neg__(self) -> "CosineCombination":
        return CosineCombination(-self.rational, tuple((a, -c) for a, c in self.cosines))

    def __sub__(self, other: "CosineCombination") -> "CosineCombination":
        return self + (-other)

    def __mul__(self, other: Union["CosineCombination", Scalar]) -> "CosineCombination":
        if isinstance(other, (int, Fraction)):
            s = _as_fraction(other)
            if s == 0:
                return CosineCombination()
            return CosineCombination(
                self.rational * s, tuple((a, c * s) for a, c in self.cosines)
            )
        rational = self.rational * other.rational
        acc: dict[Fraction, Fraction] = {}

        def put(angle: Fraction, coeff: Fraction) -> None:
            nonlocal rational
            a = _fold_cos_angle(angle)
            if a == 0:
                rational += coeff
            elif a == _HALF:
                rational -= coeff
            elif a != _QUARTER:  # cos(pi/2) = 0 contributes nothing
                acc[a] = acc.get(a, Fraction(0)) + coeff

        for a, c in self.cosines:
            put(a, c * other.rational)
        for b, d in other.cosines:
            put(b, d * self.rational)
        # cos A * cos B = (cos(A-B) + cos(A+B)) / 2
        for a, c in self.cosines:
            for b, d in other.cosines:
                half = c * d / 2
                put(a - b, half)
                put(a + b, half)
        return self._build(rational, acc)

    __rmul__ = __mul__


# ---------------------------------------------------------------------------
# Basis terms
# ---------------------------------------------------------------------------

_KIND_ORDER = {"unit": 0, "gamma": 1, "picot": 2, "logprime": 3, "logsin": 4}


@dataclass(frozen=True)
class BasisTerm:
    """One irreducible basis constant of a closed form.

    kind/arg pairs: ("unit", None) the constant 1; ("gamma", None) the Euler
    constant; ("picot", x) pi*cot(pi*x); ("logprime", p) ln p;
    ("logsin", x) ln sin(pi*x).
    """

    kind: str
    arg: Union[Fraction, int, None] = None

    def sort_key(self) -> tuple:
        return (_KIND_ORDER[self.kind], self.arg if self.arg is not None else 0)


UNIT = BasisTerm("unit")
GAMMA = BasisTerm("gamma")


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def pi_cot(angle: Fraction) -> BasisTerm:
    """Basis term pi*cot(pi*angle); any non-integer rational angle is accepted
    and folded canonically when a form is built."""
    angle = _as_fraction(angle)
    if angle.denominator == 1:
        raise ValueError(f"cot(pi*{angle}) is a pole")
    return BasisTerm("picot", angle)


def log_sin(angle: Fraction) -> BasisTerm:
    """Basis term ln sin(pi*angle); non-integer rational angle, folded on build."""
    angle = _as_fraction(angle)
    if angle.denominator == 1:
        raise ValueError(f"ln sin(pi*{angle}) is a log of zero")
    return BasisTerm("logsin", angle)


def log_prime(p: int) -> BasisTerm:
    if not _is_prime(p):
        raise ValueError(f"log_prime requires a prime, got {p}")
    return BasisTerm("logprime", p)


def factor_log_integer(n: int) -> dict[BasisTerm, Fraction]:
    """Decompose ln n (n >= 1) over prime logarithms: {ln p: multiplicity}."""
    if n < 1:
        raise ValueError("logarithm of a non-positive integer")
    out: dict[BasisTerm, Fraction] = {}
    m = n
    f = 2
    while f * f <= m:
        while m % f == 0:
            term = log_prime(f)
            out[term] = out.get(term, Fraction(0)) + 1
            m //= f
        f += 1 if f == 2 else 2
    if m > 1:
        term = log_prime(m)
        out[term] = out.get(term, Fraction(0)) + 1
    return out


# ---------------------------------------------------------------------------
# Closed forms
# ---------------------------------------------------------------------------

CoeffLike = Union[CosineCombination, Fraction, int]


def _as_combination(c: CoeffLike) -> CosineCombination:
    if isinstance(c, CosineCombination):
        return c
    return CosineCombination.from_rational(c)


@dataclass(frozen=True)
class ClosedForm:
    """Canonical map from basis terms to cosine-combination coefficients.

    The empty form is the exact value 0.  Instances are immutable; build new
    ones with :meth:`build`, :func:`combine` or :func:`scale`.
    """

    coefficients: tuple[tuple[BasisTerm, CosineCombination], ...] = ()

    @classmethod
    def build(
        cls,
        items: Union[
            Mapping[BasisTerm, CoeffLike], Iterable[tuple[BasisTerm, CoeffLike]]
        ],
    ) -> "ClosedForm":
        """Canonicalize and assemble a form from (term, coefficient) pairs.

        Folds picot/logsin angles into (0, 1/2], deletes the exactly-zero
        basis terms pi*cot(pi/2) and ln sin(pi/2), merges duplicates and
        drops zero coefficients.
        """
        pairs = items.items() if isinstance(items, Mapping) else items
        acc: dict[BasisTerm, CosineCombination] = {}

        def add(term: BasisTerm, coeff: CosineCombination) -> None:
            if coeff.is_zero:
                return
            acc[term] = acc.get(term, CosineCombination()) + coeff

        for term, raw in pairs:
            coeff = _as_combination(raw)
            if coeff.is_zero:
                continue
            if term.kind == "picot":
                a = term.arg % 1
                if a == 0:
                    raise ValueError("cot(pi*integer) is a pole")
                if a > _HALF:
                    a = 1 - a
                    coeff = -coeff
                if a == _HALF:
                    continue  # cot(pi/2) = 0
                add(BasisTerm("picot", a), coeff)
            elif term.kind == "logsin":
                a = term.arg % 1
                if a == 0:
                    raise ValueError("ln sin(pi*integer) is a log of zero")
                if a > _HALF:
                    a = 1 - a
                if a == _HALF:
                    continue  # ln sin(pi/2) = 0
                add(BasisTerm("logsin", a), coeff)
            elif term.kind == "logprime":
                if not _is_prime(term.arg):
                    raise ValueError(f"log_prime requires a prime, got {term.arg}")
                add(term, coeff)
            elif term.kind in ("unit", "gamma"):
                add(term, coeff)
            else:
                raise ValueError(f"unknown basis term kind {term.kind!r}")

        cleaned = [(t, c) for t, c in acc.items() if not c.is_zero]
        cleaned.sort(key=lambda tc: tc[0].sort_key())
        return cls(tuple(cleaned))

    @property
    def is_zero(self) -> bool:
        return not self.coefficients

    def coefficient(self, term: BasisTerm) -> CosineCombination:
        for t, c in self.coefficients:
            if t == term:
                return c
        return CosineCombination()


ZERO_FORM = ClosedForm()


def unit_form(value: Scalar) -> ClosedForm:
    """The closed form of an exact rational constant."""
    return ClosedForm.build({UNIT: _as_fraction(value)})


def combine(a: ClosedForm, b: ClosedForm, scalar_a: Scalar, scalar_b: Scalar) -> ClosedForm:
    """Exact linear combination scalar_a*a + scalar_b*b, re-canonicalized."""
    sa = _as_fraction(scalar_a)
    sb = _as_fraction(scalar_b)
    acc: list[tuple[BasisTerm, CosineCombination]] = []
    if sa != 0:
        acc.extend((t, c * sa) for t, c in a.coefficients)
    if sb != 0:
        acc.extend((t, c * sb) for t, c in b.coefficients)
    return ClosedForm.build(acc)


def scale(a: ClosedForm, scalar: Scalar) -> ClosedForm:
    return combine(a, ZERO_FORM, scalar, 0)


def canonicalize(c: ClosedForm) -> ClosedForm:
    """Re-apply all canonicalization rules (idempotent on built forms)."""
    return ClosedForm.build(c.coefficients)


def equals_numeric(a: ClosedForm, b: ClosedForm, digits: int) -> bool:
    """True iff |eval(a) - eval(b)| < 10^-(digits-10) at ``digits`` precision."""
    from . import numerics

    ctx = numerics.EvalContext(digits)
    diff = abs(numerics.eval_closed_form(a, ctx) - numerics.eval_closed_form(b, ctx))
    return diff < numerics.comparison_tolerance(ctx)


# ---------------------------------------------------------------------------
# Rendering
# ---------------------------------------------------------------------------


def _frac_plain(x: Fraction) -> str:
    return str(x)


def _frac_latex(x: Fraction) -> str:
    if x.denominator == 1:
        return str(x.numerator)
    sign = "-" if x < 0 else ""
    return rf"{sign}\frac{{{abs(x.numerator)}}}{{{x.denominator}}}"


def _combination_plain(c: CosineCombination) -> str:
    parts: list[str] = []
    if c.rational != 0 or not c.cosines:
        parts.append(_frac_plain(c.rational))
    for angle, coeff in c.cosines:
        body = f"cos(2*pi*{angle})"
        mag = abs(coeff)
        if mag == 1:
            piece = body
        elif mag.denominator == 1:
            piece = f"{mag}*{body}"
        else:
            piece = f"({mag})*{body}"
        if not parts:
            parts.append(piece if coeff > 0 else f"-{piece}")
        else:
            parts.append(f"+ {piece}" if coeff > 0 else f"- {piece}")
    return " ".join(parts)


def _combination_latex(c: CosineCombination) -> str:
    parts: list[str] = []
    if c.rational != 0 or not c.cosines:
        parts.append(_frac_latex(c.rational))
    for angle, coeff in c.cosines:
        body = rf"\cos(2\pi\cdot{angle})"
        mag = abs(coeff)
        piece = body if mag == 1 else rf"{_frac_latex(mag)}{body}"
        if not parts:
            parts.append(piece if coeff > 0 else f"-{piece}")
        else:
            parts.append(f"+ {piece}" if coeff > 0 else f"- {piece}")
    return " ".join(parts)


def _term_body(term: BasisTerm, latex: bool) -> str:
    if term.kind == "unit":
        return ""
    if term.kind == "gamma":
        return r"\gamma" if latex else "gamma"
    if term.kind == "picot":
        if latex:
            return rf"\pi\cot(\pi\cdot{term.arg})"
        return f"pi*cot(pi*{term.arg})"
    if term.kind == "logprime":
        return rf"\ln({term.arg})" if latex else f"ln({term.arg})"
    if term.kind == "logsin":
        if latex:
            return rf"\ln\sin(\pi\cdot{term.arg})"
        return f"ln(sin(pi*{term.arg}))"
    raise ValueError(f"unknown basis term kind {term.kind!r}")


def render(c: ClosedForm, format: str = "plain") -> str:
    """Deterministic text for a canonical form.

    Plain output stays inside the corpus expression grammar (with the sin/
    cos/cot extension), so it can be re-parsed and evaluated; terms appear
    in the fixed order unit, gamma, pi*cot, ln p, ln sin.
    """
    if format not in ("plain", "latex"):
        raise ValueError(f"unknown render format {format!r}")
    latex = format == "latex"
    if c.is_zero:
        return "0"
    pieces: list[str] = []
    for term, coeff in c.coefficients:
        body = _term_body(term, latex)
        if coeff.is_rational:
            q = coeff.rational
            mag = abs(q)
            if not body:
                text = _frac_latex(mag) if latex else _frac_plain(mag)
            elif mag == 1:
                text = body
            elif latex:
                text = rf"{_frac_latex(mag)}{body}"
            elif mag.denominator == 1:
                text = f"{mag}*{body}"
            else:
                text = f"({mag})*{body}"
            negative = q < 0
        else:
            inner = _combination_latex(coeff) if latex else _combination_plain(coeff)
            wrapped = rf"\left({inner}\right)" if latex else f"({inner})"
            text = wrapped if not body else (wrapped + (body if latex else f"*{body}"))
            negative = False
        if not pieces:
            pieces.append(f"-{text}" if negative else text)
        else:
            pieces.append(f"- {text}" if negative else f"+ {text}")
    return " ".join(pieces)
