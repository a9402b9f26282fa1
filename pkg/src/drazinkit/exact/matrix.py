"""Immutable dense square matrices over Q."""

from fractions import Fraction
from math import lcm

from .rational import format_rational, parse_rational


class Matrix:
    """A dim x dim matrix of Fractions.

    Instances are immutable and hashable. ``A @ B`` and ``A * B`` are both
    the matrix product; ``A * c`` with a scalar ``c`` scales.
    """

    __slots__ = ("_rows", "_scaled")

    def __init__(self, rows):
        rows = tuple(tuple(parse_rational(x) for x in row) for row in rows)
        n = len(rows)
        if n == 0:
            raise ValueError("matrix must have at least one row")
        for row in rows:
            if len(row) != n:
                raise ValueError(f"matrix is not square: row of length {len(row)} in a {n}-row matrix")
        self._rows = rows
        self._scaled = None

    @classmethod
    def _trusted(cls, rows):
        # rows: tuple of tuples of Fraction, already square
        self = object.__new__(cls)
        self._rows = rows
        self._scaled = None
        return self

    @classmethod
    def identity(cls, n):
        one, zero = Fraction(1), Fraction(0)
        return cls._trusted(tuple(tuple(one if i == j else zero for j in range(n)) for i in range(n)))

    @classmethod
    def zero(cls, n):
        zero = Fraction(0)
        return cls._trusted(tuple((zero,) * n for _ in range(n)))

    @classmethod
    def scalar(cls, n, c):
        return cls.identity(n) * parse_rational(c)

    @property
    def dim(self):
        return len(self._rows)

    @property
    def rows(self):
        return self._rows

    def __getitem__(self, ij):
        i, j = ij
        return self._rows[i][j]

    def __iter__(self):
        return iter(self._rows)

    def flat(self):
        """Row-major entries; the vectorization used for linear dependence tests."""
        return [x for row in self._rows for x in row]

    def is_zero(self):
        return all(x == 0 for row in self._rows for x in row)

    def is_identity(self):
        return self == Matrix.identity(self.dim)

    def transpose(self):
        return Matrix._trusted(tuple(zip(*self._rows)))

    # --- arithmetic -------------------------------------------------------

    def _check_dim(self, other):
        if other.dim != self.dim:
            raise ValueError(f"dimension mismatch: {self.dim} vs {other.dim}")

    def __add__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        self._check_dim(other)
        return Matrix._trusted(tuple(
            tuple(a + b for a, b in zip(r, s)) for r, s in zip(self._rows, other._rows)))

    def __sub__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        self._check_dim(other)
        return Matrix._trusted(tuple(
            tuple(a - b for a, b in zip(r, s)) for r, s in zip(self._rows, other._rows)))

    def __neg__(self):
        return Matrix._trusted(tuple(tuple(-a for a in r) for r in self._rows))

    def _integer_form(self):
        # (d, M) with self == M / d and M integral; products run on ints.
        if self._scaled is None:
            d = lcm(*(x.denominator for row in self._rows for x in row))
            ints = tuple(tuple(x.numerator * (d // x.denominator) for x in row) for row in self._rows)
            self._scaled = (d, ints)
        return self._scaled

    def __matmul__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        self._check_dim(other)
        da, a = self._integer_form()
        db, b = other._integer_form()
        d = da * db
        cols = tuple(zip(*b))
        return Matrix._trusted(tuple(
            tuple(Fraction(sum(x * y for x, y in zip(row, col)), d) for col in cols)
            for row in a))

    def __mul__(self, other):
        if isinstance(other, Matrix):
            return self @ other
        c = parse_rational(other)
        return Matrix._trusted(tuple(tuple(a * c for a in r) for r in self._rows))

    def __rmul__(self, other):
        if isinstance(other, Matrix):
            return other @ self
        return self * other

    def __truediv__(self, other):
        return self * (1 / parse_rational(other))

    def __pow__(self, k):
        if not isinstance(k, int) or k < 0:
            raise ValueError(f"exponent must be a nonnegative integer, got {k!r}")
        result = Matrix.identity(self.dim)
        base = self
        while k:
            if k & 1:
                result = result @ base
            k >>= 1
            if k:
                base = base @ base
        return result

    def commutes_with(self, other):
        return self @ other == other @ self

    def inverse(self):
        """Ordinary inverse; raises ZeroDivisionError for singular matrices."""
        from .linsolve import InconsistentSystemError, solve_linear

        n = self.dim
        try:
            sol = solve_linear(self._rows, Matrix.identity(n).rows)
        except InconsistentSystemError:
            raise ZeroDivisionError("matrix is singular") from None
        if sol.rank < n:
            raise ZeroDivisionError("matrix is singular")
        return Matrix(sol.x)

    # --- comparison / display --------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self._rows == other._rows

    def __hash__(self):
        return hash(self._rows)

    def to_strings(self):
        return [[format_rational(x) for x in row] for row in self._rows]

    def __repr__(self):
        return f"Matrix({self.to_strings()!r})"

    def __str__(self):
        cells = self.to_strings()
        width = max(len(c) for row in cells for c in row)
        return "\n".join("[" + " ".join(c.rjust(width) for c in row) + "]" for row in cells)


_OPS = {
    "add": lambda a, b: a + b,
    "sub": lambda a, b: a - b,
    "mul": lambda a, b: a @ b,
    "scale": lambda a, c: a * c,
}


def mat_arith(a, b, op):
    """Apply ``op`` in {"add", "sub", "mul", "scale"} to ``a`` and ``b``."""
    try:
        fn = _OPS[op]
    except KeyError:
        raise ValueError(f"unknown matrix operation {op!r}") from None
    if op == "scale":
        if isinstance(b, Matrix):
            raise TypeError("scale takes a rational, not a matrix")
    elif not isinstance(b, Matrix):
        raise TypeError(f"{op} takes two matrices")
    return fn(a, b)


def mat_pow(a, k):
    return a ** k
