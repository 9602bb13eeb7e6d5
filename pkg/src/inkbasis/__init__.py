"""Truncated orthogonal-series representation of digital ink.

Handwritten traces become short coefficient vectors over Legendre,
Chebyshev, or their derivative-augmented (Sobolev) variants; those vectors
support fast curve distances, reconstruction-error analysis, and nearest
neighbour symbol classification.
"""

from .bases import (
    BASIS_KINDS,
    DEFAULT_LAMBDA,
    InnerProductSpec,
    OrthoBasis,
    basis_from_json_dict,
    basis_to_json_dict,
    build_basis,
    build_named_basis,
    classical_sq_norm,
    inner_closed_form,
    load_basis,
    project,
    save_basis,
    spec_for_kind,
    synthesize,
)
from .classify import (
    LabeledDataset,
    accuracy_sweep,
    coeff_distance_sq,
    knn_accuracy,
    knn_classify,
    match_symbol,
    match_symbol_json,
    representation_error,
)
from .errors import (
    BasisMismatchError,
    DegenerateTraceError,
    DegreeTooLargeError,
    DomainError,
    EmptyModelSetError,
    EmptyTrainingSetError,
    InkBasisError,
    LengthMismatchError,
    ParseError,
    UnsupportedOrderError,
)
from .ink import (
    InkTrace,
    NormalizedTrace,
    SplineKind,
    SymbolCoeffs,
    arc_length_normalize,
    collapse_duplicates,
    load_inkml,
    load_pendigits,
    merge_strokes,
    parse_inkml,
    parse_pendigits,
    read_coeffs_jsonl,
    symbol_coeffs,
    to_coeffs,
    write_coeffs_jsonl,
)
from .poly import (
    BasisKind,
    DensePoly,
    PiecewisePoly,
    Weight,
    convert,
    derivative,
    eval_clenshaw,
    eval_legendre,
    inner_piecewise,
    weighted_moment,
)

__version__ = "0.1.0"

__all__ = [
    "BASIS_KINDS",
    "DEFAULT_LAMBDA",
    "BasisKind",
    "BasisMismatchError",
    "DegenerateTraceError",
    "DegreeTooLargeError",
    "DensePoly",
    "DomainError",
    "EmptyModelSetError",
    "EmptyTrainingSetError",
    "InkBasisError",
    "InkTrace",
    "InnerProductSpec",
    "LabeledDataset",
    "LengthMismatchError",
    "NormalizedTrace",
    "OrthoBasis",
    "ParseError",
    "PiecewisePoly",
    "SplineKind",
    "SymbolCoeffs",
    "UnsupportedOrderError",
    "Weight",
    "accuracy_sweep",
    "arc_length_normalize",
    "basis_from_json_dict",
    "basis_to_json_dict",
    "build_basis",
    "build_named_basis",
    "classical_sq_norm",
    "coeff_distance_sq",
    "collapse_duplicates",
    "convert",
    "derivative",
    "eval_clenshaw",
    "eval_legendre",
    "inner_closed_form",
    "inner_piecewise",
    "knn_accuracy",
    "knn_classify",
    "load_basis",
    "load_inkml",
    "load_pendigits",
    "match_symbol",
    "match_symbol_json",
    "merge_strokes",
    "parse_inkml",
    "parse_pendigits",
    "project",
    "read_coeffs_jsonl",
    "representation_error",
    "save_basis",
    "spec_for_kind",
    "symbol_coeffs",
    "synthesize",
    "to_coeffs",
    "weighted_moment",
    "write_coeffs_jsonl",
]
