"""Closed forms of matrix power sequences built from impulses and geometric terms.

A sequence here is a finite combination

    U(k) = sum_i V_i * delta(i, k) + sum_j W_j * lam_j**k      (k >= 0)

with distinct impulse positions i, distinct nonzero ratios lam_j, and nonzero
coefficients. Impulses and geometric sequences are linearly independent, so
this representation is unique and equality of objects is equality of
sequences.

For a matrix whose minimal polynomial is X^t * g with g square-free and split
over Q, (A^k) has such a form (``pcf``). Inverting every ratio and keeping the
impulses gives the power sequence of the complete inverse; inverting ratios,
dropping impulses and adding pi_0 at k = 0 gives that of the Drazin inverse.
"""

import enum
from fractions import Fraction

from .exact import Matrix, Poly, is_square_free, min_poly, poly_gcd, rational_roots, solve_linear
from .inverses import (
    InverseReport,
    equation_holds,
    index,
    spectral_projection_zero,
)

DEFAULT_HORIZON = 12


class EligibilityError(ValueError):
    """(A^k) has no impulse-plus-geometric closed form over Q."""

    code = "INELIGIBLE"

    def __init__(self, message, factor):
        super().__init__(message)
        self.factor = factor


class NotSplitError(EligibilityError):
    code = "NOT_SPLIT"


class NotSquareFreeError(EligibilityError):
    code = "NOT_SQUARE_FREE"


class Psi(enum.Enum):
    """What to do with the impulse part under ratio inversion."""

    ZERO = "zero"
    IDENTITY = "identity"


class _Combination:
    __slots__ = ("impulse", "geometric")

    def __init__(self, impulse=(), geometric=()):
        imp = {}
        for i, c in _pairs(impulse):
            if not isinstance(i, int) or isinstance(i, bool) or i < 0:
                raise ValueError(f"impulse position must be a nonnegative integer, got {i!r}")
            c = self._coerce(c)
            imp[i] = imp[i] + c if i in imp else c
        geo = {}
        for lam, c in _pairs(geometric):
            lam = Fraction(lam)
            if lam == 0:
                raise ValueError("geometric ratio must be nonzero")
            c = self._coerce(c)
            geo[lam] = geo[lam] + c if lam in geo else c
        self.impulse = tuple(sorted(
            ((i, c) for i, c in imp.items() if not self._is_zero(c)), key=lambda t: t[0]))
        self.geometric = tuple(sorted(
            ((lam, c) for lam, c in geo.items() if not self._is_zero(c)), key=lambda t: t[0]))

    # hooks -------------------------------------------------------------------
    def _coerce(self, c):
        raise NotImplementedError

    def _is_zero(self, c):
        raise NotImplementedError

    def _zero(self):
        raise NotImplementedError

    def _new(self, impulse, geometric):
        raise NotImplementedError

    # -------------------------------------------------------------------------
    def __call__(self, k):
        if not isinstance(k, int) or k < 0:
            raise ValueError(f"sequence index must be a nonnegative integer, got {k!r}")
        acc = self._zero()
        for i, c in self.impulse:
            if i == k:
                acc = acc + c
        for lam, c in self.geometric:
            acc = acc + c * lam ** k
        return acc

    def _check(self, other):
        if type(other) is not type(self):
            raise TypeError(f"cannot combine {type(self).__name__} with {type(other).__name__}")

    def __add__(self, other):
        self._check(other)
        return self._new(self.impulse + other.impulse, self.geometric + other.geometric)

    def __neg__(self):
        return self._new([(i, -c) for i, c in self.impulse], [(lam, -c) for lam, c in self.geometric])

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        """Pointwise product, written back in canonical form.

        delta_i * delta_j = [i == j] delta_i, delta_i * lam^k = lam^i delta_i,
        lam^k * mu^k = (lam*mu)^k. Factor order is preserved for matrices.
        """
        self._check(other)
        imp = []
        geo = []
        for i, c in self.impulse:
            for j, d in other.impulse:
                if i == j:
                    imp.append((i, c * d))
            for mu, d in other.geometric:
                imp.append((i, c * d * mu ** i))
        for lam, c in self.geometric:
            for j, d in other.impulse:
                imp.append((j, c * d * lam ** j))
            for mu, d in other.geometric:
                geo.append((lam * mu, c * d))
        return self._new(imp, geo)

    def impulse_part(self):
        return self._new(self.impulse, ())

    def geometric_part(self):
        return self._new((), self.geometric)

    def theta(self, mode=Psi.IDENTITY):
        """Invert every ratio; keep (IDENTITY) or drop (ZERO) the impulse part."""
        mode = Psi(mode)
        imp = self.impulse if mode is Psi.IDENTITY else ()
        return self._new(imp, [(1 / lam, c) for lam, c in self.geometric])

    def is_zero(self):
        return not self.impulse and not self.geometric

    def __eq__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        return self.impulse == other.impulse and self.geometric == other.geometric

    def __hash__(self):
        return hash((type(self).__name__, self.impulse, self.geometric))


def _pairs(terms):
    return terms.items() if hasattr(terms, "items") else terms


class ScalarSequence(_Combination):
    """An element of the span of impulses delta_i and geometric sequences lam^k over Q."""

    __slots__ = ()

    def _coerce(self, c):
        return Fraction(c)

    def _is_zero(self, c):
        return c == 0

    def _zero(self):
        return Fraction(0)

    def _new(self, impulse, geometric):
        return ScalarSequence(impulse, geometric)

    def __repr__(self):
        return f"ScalarSequence(impulse={dict(self.impulse)!r}, geometric={dict(self.geometric)!r})"


class MatrixSequence(_Combination):
    """Matrix-coefficient combination sum V_i delta_i + sum W_j lam_j^k."""

    __slots__ = ("dim",)

    def __init__(self, dim, impulse=(), geometric=()):
        if not isinstance(dim, int) or dim < 1:
            raise ValueError(f"dimension must be a positive integer, got {dim!r}")
        self.dim = dim
        super().__init__(impulse, geometric)

    def _coerce(self, c):
        if not isinstance(c, Matrix):
            c = Matrix(c)
        if c.dim != self.dim:
            raise ValueError(f"coefficient of dimension {c.dim} in a dimension-{self.dim} sequence")
        return c

    def _is_zero(self, c):
        return c.is_zero()

    def _zero(self):
        return Matrix.zero(self.dim)

    def _new(self, impulse, geometric):
        return MatrixSequence(self.dim, impulse, geometric)

    def _check(self, other):
        super()._check(other)
        if other.dim != self.dim:
            raise ValueError(f"dimension mismatch: {self.dim} vs {other.dim}")

    def __eq__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        return self.dim == other.dim and super().__eq__(other)

    __hash__ = _Combination.__hash__

    def __repr__(self):
        return (f"MatrixSequence({self.dim}, impulse={list(self.impulse)!r}, "
                f"geometric={list(self.geometric)!r})")


def seq_eval(u, k):
    return u(k)


def seq_arith(u, v, op):
    if op == "add":
        return u + v
    if op == "sub":
        return u - v
    if op == "mul":
        return u * v
    raise ValueError(f"unknown sequence operation {op!r}")


def theta_psi(u, mode):
    return u.theta(mode)


def pcf_spectrum(a):
    """Return (index, nonzero eigenvalues) if (A^k) has an impulse-plus-geometric form.

    Raises NotSplitError if the nonzero part of m_A has a factor without
    rational roots, NotSquareFreeError if some nonzero eigenvalue repeats in m_A.
    """
    m = min_poly(a)
    t0 = index(a)
    g = m // Poly.monomial(t0)
    report = rational_roots(g)
    if not report.splits:
        raise NotSplitError(
            f"minimal polynomial {m} has the factor {report.cofactor} with no rational root",
            report.cofactor)
    if not is_square_free(g):
        rep = poly_gcd(g, g.derivative())
        raise NotSquareFreeError(
            f"minimal polynomial {m} repeats the nonzero factor {rep}; "
            "its power sequence needs polynomial-in-k coefficients", rep)
    return t0, tuple(r for r, _ in report.roots)


def pcf(a):
    """Closed form of (A^k)_{k>=0}: impulses below the index plus geometric terms.

    W_j are solved from sum_j lam_j^k W_j = A^k for k = t0 .. t0+m-1, then
    V_i = A^i - sum_j lam_j^i W_j for i < t0.
    """
    t0, ratios = pcf_spectrum(a)
    n = a.dim
    m = len(ratios)
    geometric = []
    if m:
        vandermonde = [[lam ** k for lam in ratios] for k in range(t0, t0 + m)]
        start = a ** t0
        rhs = [start.flat()]
        for _ in range(m - 1):
            start = start @ a
            rhs.append(start.flat())
        sol = solve_linear(vandermonde, rhs)
        for lam, row in zip(ratios, sol.x):
            geometric.append((lam, Matrix(row[r * n:(r + 1) * n] for r in range(n))))
    geo_only = MatrixSequence(n, (), geometric)
    impulse = []
    power = Matrix.identity(n)
    for i in range(t0):
        impulse.append((i, power - geo_only(i)))
        power = power @ a
    return MatrixSequence(n, impulse, geometric)


def drazin_seq(a):
    """(A_d^k) for k >= 1, with value I at k = 0: ratio inversion plus pi_0 at 0."""
    return pcf(a).theta(Psi.ZERO) + MatrixSequence(a.dim, [(0, spectral_projection_zero(a))])


def complete_seq(a):
    """(A_c^k)_{k>=0}: the closed form of (A^k) with k replaced by -k."""
    return pcf(a).theta(Psi.IDENTITY)


def seq_u_inverse_check(u, s, spec, horizon=DEFAULT_HORIZON):
    """Check the equations of ``spec`` for (u(k), s(k)) at every k in 0..horizon."""
    if u.dim != s.dim:
        raise ValueError(f"dimension mismatch: {u.dim} vs {s.dim}")
    results = {eq: True for eq in spec.ordered()}
    first = {}
    for k in range(horizon + 1):
        uk, sk = u(k), s(k)
        for eq in results:
            if eq not in first and not equation_holds(eq, uk, sk, spec.n):
                results[eq] = False
                first[eq] = k
    return InverseReport(results, first)
