"""Exact computations for equivariant obstructions to graded free complexes."""

from .moduli import ExactShape, kappa_generators, fold_once, prefix_merge
from .obstructions import ComplexDegreeData, full_report
from .oracle import build_koszul, validate_complex, evaluate_and_check_exactness, extract_degree_data
from .symmetric import elementary_symmetric, power_sums, series_quotient_remainder, find_splitting_primes
from .transgression import stiefel_first_differential, obstruction_survival

__all__ = [
    "ComplexDegreeData",
    "ExactShape",
    "build_koszul",
    "elementary_symmetric",
    "evaluate_and_check_exactness",
    "extract_degree_data",
    "find_splitting_primes",
    "fold_once",
    "full_report",
    "kappa_generators",
    "obstruction_survival",
    "power_sums",
    "prefix_merge",
    "series_quotient_remainder",
    "stiefel_first_differential",
    "validate_complex",
]
