"""Gaussian elimination over Q with first-nonzero pivoting."""

from dataclasses import dataclass
from fractions import Fraction

from .rational import parse_rational


class InconsistentSystemError(ValueError):
    """The system Mx = b has no solution."""


@dataclass(frozen=True)
class Solution:
    """One exact solution of Mx = b (free variables set to zero)."""

    x: tuple      # rows of the n x r solution
    rank: int
    pivots: tuple

    def column(self, j=0):
        return [row[j] for row in self.x]


def _as_rows(m):
    rows = m.rows if hasattr(m, "rows") else m
    return [[parse_rational(v) for v in row] for row in rows]


def rref(rows, ncols=None):
    """Reduce ``rows`` (list of lists of Fraction) to reduced row echelon form in place.

    Only the first ``ncols`` columns are used for pivoting. Returns the pivot
    column indices in order; pivot row ``r`` holds pivot ``pivots[r]``.
    """
    if not rows:
        return []
    ncols = len(rows[0]) if ncols is None else ncols
    pivots = []
    r = 0
    nrows = len(rows)
    for c in range(ncols):
        if r == nrows:
            break
        for i in range(r, nrows):
            if rows[i][c] != 0:
                break
        else:
            continue
        if i != r:
            rows[r], rows[i] = rows[i], rows[r]
        prow = rows[r]
        inv = 1 / prow[c]
        if inv != 1:
            prow[:] = [v * inv for v in prow]
        for i in range(nrows):
            if i != r:
                f = rows[i][c]
                if f != 0:
                    rows[i] = [a - f * b for a, b in zip(rows[i], prow)]
        pivots.append(c)
        r += 1
    return pivots


def solve_linear(m, rhs):
    """Solve M X = B exactly.

    ``m`` is a sequence of rows (rectangular, any shape) or a Matrix; ``rhs``
    is a sequence of rows with one row per equation, or a flat vector.
    Returns a :class:`Solution`; raises :class:`InconsistentSystemError` if no
    solution exists and ``ValueError`` for mismatched shapes.
    """
    a = _as_rows(m)
    vector = len(rhs) > 0 and not isinstance(rhs[0], (list, tuple)) and not hasattr(rhs, "rows")
    b = [[parse_rational(v)] for v in rhs] if vector else _as_rows(rhs)
    if len(a) != len(b):
        raise ValueError(f"system has {len(a)} equations but {len(b)} right-hand rows")
    if not a:
        raise ValueError("empty system")
    n = len(a[0])
    if any(len(row) != n for row in a):
        raise ValueError("ragged coefficient matrix")
    nr = len(b[0])
    if any(len(row) != nr for row in b):
        raise ValueError("ragged right-hand side")

    aug = [ra + rb for ra, rb in zip(a, b)]
    pivots = rref(aug, n)
    rank = len(pivots)
    for row in aug[rank:]:
        if any(v != 0 for v in row[n:]):
            raise InconsistentSystemError(f"inconsistent system (rank {rank})")
    zero = Fraction(0)
    x = [[zero] * nr for _ in range(n)]
    for r, c in enumerate(pivots):
        x[c] = aug[r][n:]
    if vector:
        x = [row[:1] for row in x]
    return Solution(tuple(tuple(row) for row in x), rank, tuple(pivots))


def rank(m):
    """Exact rank of a matrix (square Matrix or rectangular rows)."""
    rows = _as_rows(m)
    return len(rref(rows))
