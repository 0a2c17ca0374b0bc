"""Exact Pell-family sequences, Z[sqrt(2)] arithmetic, 3x3 matrix algebra,
identity checking and the binary-matrix census, backed by GMP."""

from ._core import (
    Zsqrt2,
    adjugate,
    binary_index,
    binary_matrix,
    binet_check,
    catalog,
    char_poly,
    char_poly_str,
    check,
    check_range,
    classify,
    closed_form,
    congruence_mod4,
    det,
    double_index_check,
    flip_guard,
    gcd_consecutive,
    generator,
    identity_info,
    intro_check,
    is_pell_generating,
    mat_mul,
    mat_pow,
    partial_sum,
    partial_sum_bound,
    recurrence,
    sequence_tags,
    sidon_check,
    similar_over_q,
    term,
    terms,
    trace,
    trace_identity_check,
)

__version__ = "0.1.0"

__all__ = [
    "Zsqrt2",
    "adjugate",
    "binary_index",
    "binary_matrix",
    "binet_check",
    "catalog",
    "char_poly",
    "char_poly_str",
    "check",
    "check_range",
    "classify",
    "closed_form",
    "congruence_mod4",
    "det",
    "double_index_check",
    "flip_guard",
    "gcd_consecutive",
    "generator",
    "identity_info",
    "intro_check",
    "is_pell_generating",
    "mat_mul",
    "mat_pow",
    "partial_sum",
    "partial_sum_bound",
    "recurrence",
    "sequence_tags",
    "sidon_check",
    "similar_over_q",
    "term",
    "terms",
    "trace",
    "trace_identity_check",
]
