"""Exact quasipolar decompositions in twisted 2x2 matrix rings.

The package decides, with machine-checked certificates, when elements and
whole twisted matrix rings over concrete commutative local rings are
quasipolar, and validates every decision against definition-level brute
force on finite rings.
"""

from .errors import (
    ContextMismatch,
    GenRingError,
    InternalCheckFailed,
    MultiplierMismatch,
    NotAUnit,
    NotEnumerable,
    NotIdempotent,
    NotLiftable,
    ParseError,
    PreconditionViolated,
)
from .genmat import GenMatrix, conjugate, identity, scalar_matrix, zero_matrix
from .localring import (
    LocalizedInt,
    PrimeField,
    Quotient,
    Ring,
    RingElement,
    ZMod,
    innermost_base,
    is_prime,
)
from .quadratic import (
    QuadraticProblem,
    RootPair,
    newton_lift,
    series_lift,
    solve_brute,
    solve_rational,
    solve_split,
)
from .quasipolar import (
    Case,
    Certificate,
    Classification,
    CommutantSet,
    FamilyReport,
    IdempotentClass,
    IdempotentKind,
    NormalForm,
    RingDecision,
    VerificationReport,
    check_critical_family,
    classify,
    classify_idempotent,
    commutant,
    decide_ring,
    diagonalize_triangular,
    double_commutant,
    is_qnil_brute,
    is_qnil_fast,
    is_quasipolar_brute,
    is_strongly_clean_brute,
    normal_form_sJ,
    reduce_truncated,
    verify_ring,
)
from .ringspec import (
    format_element,
    format_matrix,
    format_ring,
    matrix_from_json,
    matrix_to_json,
    parse_element,
    parse_matrix,
    parse_ring,
)
from .sampling import random_element, random_jacobson, random_matrix, random_unit

__version__ = "0.1.0"

__all__ = [
    "Case",
    "Certificate",
    "Classification",
    "CommutantSet",
    "ContextMismatch",
    "FamilyReport",
    "GenMatrix",
    "GenRingError",
    "IdempotentClass",
    "IdempotentKind",
    "InternalCheckFailed",
    "LocalizedInt",
    "MultiplierMismatch",
    "NormalForm",
    "NotAUnit",
    "NotEnumerable",
    "NotIdempotent",
    "NotLiftable",
    "ParseError",
    "PreconditionViolated",
    "PrimeField",
    "QuadraticProblem",
    "Quotient",
    "Ring",
    "RingDecision",
    "RingElement",
    "RootPair",
    "VerificationReport",
    "ZMod",
    "check_critical_family",
    "classify",
    "classify_idempotent",
    "commutant",
    "conjugate",
    "decide_ring",
    "diagonalize_triangular",
    "double_commutant",
    "format_element",
    "format_matrix",
    "format_ring",
    "identity",
    "innermost_base",
    "is_prime",
    "is_qnil_brute",
    "is_qnil_fast",
    "is_quasipolar_brute",
    "is_strongly_clean_brute",
    "matrix_from_json",
    "matrix_to_json",
    "newton_lift",
    "normal_form_sJ",
    "parse_element",
    "parse_matrix",
    "parse_ring",
    "random_element",
    "random_jacobson",
    "random_matrix",
    "random_unit",
    "reduce_truncated",
    "scalar_matrix",
    "series_lift",
    "solve_brute",
    "solve_rational",
    "solve_split",
    "verify_ring",
    "zero_matrix",
]
