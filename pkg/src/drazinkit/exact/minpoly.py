from fractions import Fraction

from .linsolve import rref
from .matrix import Matrix
from .poly import Poly


def min_poly(a: Matrix) -> Poly:
    """Monic minimal polynomial of ``a``.

    The vectorized powers I, A, ..., A^n are placed as columns of an
    n^2 x (n+1) system. The first non-pivot column d of its reduced echelon
    form is the first power dependent on the earlier ones, and the column
    itself holds the coefficients of that dependence.
    """
    n = a.dim
    powers = [Matrix.identity(n)]
    for _ in range(n):
        powers.append(powers[-1] @ a)
    vecs = [p.flat() for p in powers]
    rows = [list(col) for col in zip(*vecs)]
    pivots = rref(rows)
    d = next(j for j, p in enumerate(pivots + [None]) if p != j)
    return Poly([-rows[r][d] for r in range(d)] + [Fraction(1)])
