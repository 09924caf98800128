"""gscalars: exact arithmetic in non-Archimedean quotient algebras of
rational sequences, with decidable filters, ideals, and generalized sums."""

from .errors import (
    ConfigTooLarge,
    Error,
    FilterMismatch,
    MissingException,
    NonPolynomialTerms,
    NotConvergent,
    NotStandardizable,
    TypeMismatch,
    UnboundedSequence,
    ZeroDivisor,
    ZeroPolynomial,
    ZeroScalar,
)
from .exactnum import (
    ExtendedRat,
    MINUS_INFINITY,
    PLUS_INFINITY,
    Poly,
    Rat,
    RatFun,
    eventual_sign,
    integer_roots_nonneg,
    limit_at_infinity,
    rat,
)
from .galois import IdealDescriptor, ideal_closure_check, in_ideal, realize_zero_set, roundtrip_filter
from .oracle import FiniteConfig, enumerate_filters, enumerate_ideals, verify_galois, verify_maximal_prime
from .quotient import (
    Classification,
    Scalar,
    archimedean_counterexample,
    classify,
    embed,
    le_set,
    leq,
    omega,
    scalar_eq,
    standard_part,
    try_invert,
)
from .report import Report
from .seqrep import BSeqVerdict, RSeq, indicator, make_constant, make_identity
from .series import (
    SeriesVerdict,
    banach_bounds_check,
    classify_series,
    generalized_sum,
    partial_sums,
    shift_invariance_impossibility,
)
from .sets_filters import FilterDescriptor, SetDescriptor, check_filter_axioms, filter_contains

__version__ = "0.1.0"

__all__ = [
    "BSeqVerdict",
    "Classification",
    "ConfigTooLarge",
    "Error",
    "ExtendedRat",
    "FilterDescriptor",
    "FilterMismatch",
    "FiniteConfig",
    "IdealDescriptor",
    "MINUS_INFINITY",
    "MissingException",
    "NonPolynomialTerms",
    "NotConvergent",
    "NotStandardizable",
    "PLUS_INFINITY",
    "Poly",
    "RSeq",
    "Rat",
    "RatFun",
    "Report",
    "Scalar",
    "SeriesVerdict",
    "SetDescriptor",
    "TypeMismatch",
    "UnboundedSequence",
    "ZeroDivisor",
    "ZeroPolynomial",
    "ZeroScalar",
    "archimedean_counterexample",
    "banach_bounds_check",
    "check_filter_axioms",
    "classify",
    "classify_series",
    "embed",
    "enumerate_filters",
    "enumerate_ideals",
    "eventual_sign",
    "filter_contains",
    "generalized_sum",
    "ideal_closure_check",
    "in_ideal",
    "indicator",
    "integer_roots_nonneg",
    "le_set",
    "leq",
    "limit_at_infinity",
    "make_constant",
    "make_identity",
    "omega",
    "partial_sums",
    "rat",
    "realize_zero_set",
    "roundtrip_filter",
    "scalar_eq",
    "shift_invariance_impossibility",
    "standard_part",
    "try_invert",
    "verify_galois",
    "verify_maximal_prime",
]
