"""Exact rational interpolation via subresultants, Sylvester sums and confluent Vandermonde determinants."""

from .field import FieldElement, FieldError, FieldSpec, field_inv, field_parse, small_factorial
from .interp import (
    InterpolationProblem,
    NoSolution,
    Solution,
    ZeroFunction,
    hermite_interpolant,
    normalize_canonical,
    solve,
    solve_determinantal,
    solve_subresultant,
    solve_sylvester,
    verify_solution,
)
from .poly import Polynomial
from .subres import extended_euclid, find_pivot_degree, sres_det, sres_prs

__all__ = [
    "FieldElement",
    "FieldError",
    "FieldSpec",
    "InterpolationProblem",
    "NoSolution",
    "Polynomial",
    "Solution",
    "ZeroFunction",
    "extended_euclid",
    "field_inv",
    "field_parse",
    "find_pivot_degree",
    "hermite_interpolant",
    "normalize_canonical",
    "small_factorial",
    "solve",
    "solve_determinantal",
    "solve_subresultant",
    "solve_sylvester",
    "sres_det",
    "sres_prs",
    "verify_solution",
]
