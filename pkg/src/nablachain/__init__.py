"""Symbolic operator algebra for grad, curl and div on R^3.

Chains of the three first-order differential operators are parsed,
type-checked and classified: a chain is meaningless when adjacent sorts
clash, identically zero when it contains an annihilating pair, and
otherwise one of exactly three nontrivial normal forms per length.
Every classification claim is backed by an exact polynomial engine over
the rationals and an independent finite-difference oracle.
"""

from .classify import (
    Census,
    Classification,
    Family,
    Nontrivial,
    TrivialZero,
    census,
    classify,
    meaningful_chains,
    nontrivial_chain,
)
from .collections import (
    CollectionKind,
    ExceedsBound,
    Order,
    OrderResult,
    annihilates,
    check_coordinate_multiple,
    check_squared_coordinate_multiple,
    check_vector_harmonic_swap,
    collection_order,
    third_order_annihilation_report,
)
from .errors import (
    DepthUnsupportedError,
    FieldFormatError,
    MeaninglessChainError,
    NablachainError,
    NotInCollectionError,
    NumericalFailureError,
    SortMismatchError,
    TermLimitError,
)
from .fdcheck import (
    CrossCheckReport,
    FdConfig,
    SampledField,
    as_sampled,
    cross_check,
    fd_apply,
    fd_first_order,
    fd_partial,
)
from .fields import (
    FieldValue,
    Polynomial,
    ScalarField,
    VectorField,
    apply_chain,
    apply_operator,
    curl,
    div,
    dumps_field,
    eval_at,
    field_from_json,
    field_to_json,
    grad,
    is_zero,
    laplacian,
    loads_field,
    sort_of,
    vector_laplacian,
)
from .operators import (
    Chain,
    ChainSignature,
    Meaningful,
    Meaningless,
    Operator,
    Sort,
    chain,
    chain_signature,
    compose_pair,
    compose_signatures,
    signature,
)
from .parser import ParseError, format_chain, parse
from .verify import CheckResult, run_suite

__version__ = "0.1.0"

__all__ = [
    "Census",
    "Chain",
    "ChainSignature",
    "CheckResult",
    "Classification",
    "CollectionKind",
    "CrossCheckReport",
    "DepthUnsupportedError",
    "ExceedsBound",
    "Family",
    "FdConfig",
    "FieldFormatError",
    "FieldValue",
    "Meaningful",
    "Meaningless",
    "MeaninglessChainError",
    "NablachainError",
    "Nontrivial",
    "NotInCollectionError",
    "NumericalFailureError",
    "Operator",
    "Order",
    "OrderResult",
    "ParseError",
    "Polynomial",
    "SampledField",
    "ScalarField",
    "Sort",
    "SortMismatchError",
    "TermLimitError",
    "TrivialZero",
    "VectorField",
    "annihilates",
    "apply_chain",
    "apply_operator",
    "as_sampled",
    "census",
    "chain",
    "chain_signature",
    "check_coordinate_multiple",
    "check_squared_coordinate_multiple",
    "check_vector_harmonic_swap",
    "classify",
    "collection_order",
    "compose_pair",
    "compose_signatures",
    "cross_check",
    "curl",
    "div",
    "dumps_field",
    "eval_at",
    "fd_apply",
    "fd_first_order",
    "fd_partial",
    "field_from_json",
    "field_to_json",
    "format_chain",
    "grad",
    "is_zero",
    "laplacian",
    "loads_field",
    "meaningful_chains",
    "nontrivial_chain",
    "parse",
    "run_suite",
    "signature",
    "sort_of",
    "third_order_annihilation_report",
    "vector_laplacian",
]
