"""Exact Drazin and complete inverses of square rational matrices."""

from .exact import Matrix, Poly, mat_pow, min_poly, rank
from .inverses import (
    CoreNilpotentSplit,
    Equation,
    InverseReport,
    UInverseSpec,
    complete_inverse,
    core_nilpotent,
    drazin,
    drazin_euclid,
    drazin_formula,
    index,
    is_polynomial_in,
    spectral_projection_zero,
    u_inverse_check,
)
from .sequences import (
    EligibilityError,
    MatrixSequence,
    NotSplitError,
    NotSquareFreeError,
    Psi,
    ScalarSequence,
    complete_seq,
    drazin_seq,
    pcf,
    seq_arith,
    seq_eval,
    seq_u_inverse_check,
    theta_psi,
)

__version__ = "0.1.0"
