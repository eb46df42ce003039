"""Primitive transformation shift registers over finite fields."""

from ._core import (
    BudgetExhaustedError,
    Field,
    Polynomial,
    TsrError,
    build_table,
    closed_form_count,
    conjugate_product,
    count_matrices_with_charpoly,
    count_trace_one_classes,
    count_trace_one_elements,
    cyclotomic_coset_leaders,
    enumerate_special_primitives,
    enumerate_tsrp,
    find_trace_one_quadratic,
    is_irreducible,
    is_primitive,
    is_primitive_tsr,
    normalize_spec,
    primitivity_certificate,
    reciprocal,
    run_verify,
    search_primitive_tsr,
    tsr_charpoly,
    tsr_charpoly_direct,
    tsr_period,
    tsrp_count_theorem,
    tsrp_upper_bound,
    verify_certificate,
    verify_conjecture,
)

__all__ = [
    "BudgetExhaustedError",
    "Field",
    "Polynomial",
    "TsrError",
    "build_table",
    "closed_form_count",
    "conjugate_product",
    "count_matrices_with_charpoly",
    "count_trace_one_classes",
    "count_trace_one_elements",
    "cyclotomic_coset_leaders",
    "enumerate_special_primitives",
    "enumerate_tsrp",
    "find_trace_one_quadratic",
    "is_irreducible",
    "is_primitive",
    "is_primitive_tsr",
    "normalize_spec",
    "primitivity_certificate",
    "reciprocal",
    "run_verify",
    "search_primitive_tsr",
    "tsr_charpoly",
    "tsr_charpoly_direct",
    "tsr_period",
    "tsrp_count_theorem",
    "tsrp_upper_bound",
    "verify_certificate",
    "verify_conjecture",
]
