"""Exact arithmetic substrate: rationals, square matrices, polynomials."""

from .linsolve import InconsistentSystemError, Solution, rank, rref, solve_linear
from .matrix import Matrix, mat_arith, mat_pow
from .minpoly import min_poly
from .poly import (
    Poly,
    RootReport,
    is_square_free,
    poly_arith,
    poly_gcd,
    poly_mod_inverse,
    rational_roots,
)
from .rational import format_rational, parse_rational

__all__ = [
    "InconsistentSystemError",
    "Matrix",
    "Poly",
    "RootReport",
    "Solution",
    "format_rational",
    "is_square_free",
    "mat_arith",
    "mat_pow",
    "min_poly",
    "parse_rational",
    "poly_arith",
    "poly_gcd",
    "poly_mod_inverse",
    "rank",
    "rational_roots",
    "rref",
    "solve_linear",
]
