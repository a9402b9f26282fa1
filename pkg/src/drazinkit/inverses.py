"""Index, Drazin inverse, complete inverse, and the U-inverse equation checker.

For a square matrix A of index p the four equations in an unknown X are

    (1^n)  A^n X A = A^n
    (3)    X A X = X
    (4)    X A X - A X A = X - A
    (5)    A X = X A

The Drazin inverse is the {1^p, 3, 5}-inverse and the complete inverse is the
{1^p, 4, 5}-inverse, given by A + A_d - A^2 A_d.
"""

import enum
from dataclasses import dataclass, field

from .exact import InconsistentSystemError, Matrix, Poly, min_poly, poly_mod_inverse, rank, solve_linear


class Equation(enum.Enum):
    ONE_N = "1"
    THREE = "3"
    FOUR = "4"
    FIVE = "5"

    @classmethod
    def parse(cls, token):
        token = token.strip().lower()
        if token in ("1", "1n", "1^n", "one_n"):
            return cls.ONE_N
        for eq in cls:
            if token in (eq.value, eq.name.lower()):
                return eq
        raise ValueError(f"unknown equation label {token!r}; use 1, 3, 4 or 5")


_ORDER = {eq: i for i, eq in enumerate(Equation)}


@dataclass(frozen=True)
class UInverseSpec:
    """Which equations to check, and the exponent n used by (1^n)."""

    n: int
    equations: frozenset

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 1:
            raise ValueError(f"(1^n) needs a positive integer n, got {self.n!r}")
        eqs = frozenset(Equation.parse(e) if isinstance(e, str) else Equation(e) for e in self.equations)
        if not eqs:
            raise ValueError("at least one equation must be requested")
        object.__setattr__(self, "equations", eqs)

    @classmethod
    def parse(cls, text, n):
        return cls(n, frozenset(Equation.parse(t) for t in text.split(",") if t.strip()))

    @classmethod
    def drazin(cls, n):
        return cls(n, frozenset({Equation.ONE_N, Equation.THREE, Equation.FIVE}))

    @classmethod
    def complete(cls, n):
        return cls(n, frozenset({Equation.ONE_N, Equation.FOUR, Equation.FIVE}))

    def ordered(self):
        return sorted(self.equations, key=_ORDER.__getitem__)


@dataclass(frozen=True)
class InverseReport:
    results: dict
    # equation -> first k where a pointwise sequence check failed
    counterexamples: dict = field(default_factory=dict)

    @property
    def verdict(self):
        return all(self.results.values())

    def __bool__(self):
        return self.verdict

    def as_labels(self):
        return {eq.value: ok for eq, ok in sorted(self.results.items(), key=lambda kv: _ORDER[kv[0]])}


def equation_holds(eq, a, x, n):
    if eq is Equation.ONE_N:
        an = a ** n
        return an @ x @ a == an
    if eq is Equation.THREE:
        return x @ a @ x == x
    if eq is Equation.FOUR:
        return x @ a @ x - a @ x @ a == x - a
    return a @ x == x @ a


def u_inverse_check(a, x, spec):
    """Evaluate each equation of ``spec`` for the pair (a, x) exactly."""
    if a.dim != x.dim:
        raise ValueError(f"dimension mismatch: {a.dim} vs {x.dim}")
    return InverseReport({eq: equation_holds(eq, a, x, spec.n) for eq in spec.ordered()})


def default_n(p):
    """Exponent for (1^n) given the index p; invertible matrices use n = 1."""
    return max(p, 1)


def index(a):
    """Smallest p >= 0 with rank(A^(p+1)) == rank(A^p)."""
    prev = a.dim
    power = a
    p = 0
    while True:
        r = rank(power)
        if r == prev:
            return p
        prev = r
        p += 1
        power = power @ a


def drazin_formula(a):
    """Drazin inverse from the minimal polynomial coefficients.

    With m_A = X^q + a_{q-1} X^{q-1} + ... + a_p X^p and a_p != 0,

        A_d = (-1)^(p+1) a_p^(-p-1) A^p (A^(q-p-1) + a_{q-1} A^(q-p-2) + ... + a_{p+1} I)^(p+1).
    """
    n = a.dim
    m = min_poly(a)
    p = index(a)
    q = m.degree
    if q == p:
        # m_A = X^p: A is nilpotent and A_d = 0.
        return Matrix.zero(n)
    ap = m[p]
    assert ap != 0, "lowest nonzero coefficient of the minimal polynomial must sit at the index"
    inner = Matrix.zero(n)
    for j in range(q, p, -1):
        inner = inner @ a + Matrix.scalar(n, m[j])
    sign = 1 if (p + 1) % 2 == 0 else -1
    return (a ** p) @ (inner ** (p + 1)) * (sign / ap ** (p + 1))


def drazin_euclid(a):
    """Drazin inverse via the inverse of X modulo the unit part of m_A.

    m_A = X^p g with g(0) != 0; h = X^{-1} mod g gives A^p h(A)^(p+1).
    """
    p = index(a)
    g = min_poly(a) // Poly.monomial(p)
    h = poly_mod_inverse(Poly.X(), g)
    return (a ** p) @ (h(a) ** (p + 1))


_ROUTES = {"formula": drazin_formula, "euclid": drazin_euclid}


def drazin(a, route="formula"):
    try:
        return _ROUTES[route](a)
    except KeyError:
        raise ValueError(f"unknown Drazin route {route!r}") from None


def complete_from_drazin(a, ad):
    return a + ad - a @ a @ ad


def complete_inverse(a, route="formula"):
    """The {1^p, 4, 5}-inverse A + A_d - A^2 A_d."""
    return complete_from_drazin(a, drazin(a, route))


@dataclass(frozen=True)
class CoreNilpotentSplit:
    core: Matrix
    nilpotent: Matrix
    index: int


def core_nilpotent(a):
    """Split A = C + N with C = A^2 A_d, N nilpotent of order index(A), CN = NC = 0."""
    core = a @ a @ drazin_formula(a)
    return CoreNilpotentSplit(core, a - core, index(a))


def spectral_projection_zero(a):
    """pi_0 = I - A A_d, the idempotent onto the generalized null space."""
    return Matrix.identity(a.dim) - a @ drazin_formula(a)


def is_polynomial_in(target, generator):
    """Return the Poly c with target == c(generator), or None if none exists.

    Only degrees below deg m_generator are tried, so the answer is unique.
    """
    if target.dim != generator.dim:
        raise ValueError(f"dimension mismatch: {target.dim} vs {generator.dim}")
    d = min_poly(generator).degree
    powers = [Matrix.identity(generator.dim)]
    for _ in range(d - 1):
        powers.append(powers[-1] @ generator)
    cols = [p.flat() for p in powers]
    system = [list(row) for row in zip(*cols)]
    try:
        sol = solve_linear(system, target.flat())
    except InconsistentSystemError:
        return None
    return Poly(sol.column())
