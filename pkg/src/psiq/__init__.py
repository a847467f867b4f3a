"""Exact closed forms and arbitrary-precision values of the digamma function
at rational arguments.

The package computes psi(p/q) as an exact symbolic combination of the Euler
constant, prime logarithms, pi*cot(pi*x) and ln sin(pi*x) terms with exact
cosine-combination coefficients, evaluates such forms to any requested
decimal precision, and cross-verifies them against independent numeric
oracles and a bundled corpus of published values.
"""

from .closedform import (
    GAMMA,
    UNIT,
    BasisTerm,
    ClosedForm,
    CosineCombination,
    canonicalize,
    combine,
    equals_numeric,
    log_prime,
    log_sin,
    pi_cot,
    render,
    scale,
    unit_form,
)
from .formulas import (
    gauss_1813,
    gr_variant,
    murty_saradha,
    nielsen,
    psi_closed,
    psi_complement,
    psi_negative_unit,
    reflect,
)
from .numerics import (
    EvalContext,
    bernoulli_even,
    comparison_tolerance,
    const_gamma,
    const_pi,
    eval_closed_form,
    format_decimal,
    oracle_psi_asymptotic,
    oracle_psi_series,
)
from .rationals import (
    ArgumentClass,
    PoleError,
    ShiftDecomposition,
    classify,
    harmonic,
    parse_rational,
    reduce,
    shift_decompose,
)
from .verification import (
    ComparisonReport,
    TableEntry,
    bundled_corpus_path,
    bundled_errata_path,
    compare_formulas,
    errata_gr,
    errata_jensen,
    load_corpus,
    verify_tables,
)

__version__ = "0.1.0"

__all__ = [
    "ArgumentClass",
    "BasisTerm",
    "ClosedForm",
    "ComparisonReport",
    "CosineCombination",
    "EvalContext",
    "GAMMA",
    "PoleError",
    "ShiftDecomposition",
    "TableEntry",
    "UNIT",
    "bernoulli_even",
    "bundled_corpus_path",
    "bundled_errata_path",
    "canonicalize",
    "classify",
    "combine",
    "compare_formulas",
    "comparison_tolerance",
    "const_gamma",
    "const_pi",
    "equals_numeric",
    "errata_gr",
    "errata_jensen",
    "eval_closed_form",
    "format_decimal",
    "gauss_1813",
    "gr_variant",
    "harmonic",
    "load_corpus",
    "log_prime",
    "log_sin",
    "murty_saradha",
    "nielsen",
    "oracle_psi_asymptotic",
    "oracle_psi_series",
    "parse_rational",
    "pi_cot",
    "psi_closed",
    "psi_complement",
    "psi_negative_unit",
    "reduce",
    "reflect",
    "render",
    "scale",
    "shift_decompose",
    "unit_form",
    "verify_tables",
]
