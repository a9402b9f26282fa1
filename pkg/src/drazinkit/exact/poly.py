"""Univariate polynomials over Q.

A polynomial c_0 + c_1 X + ... + c_d X^d is stored as the tuple
(c_0, ..., c_d) of Fractions with c_d != 0; the zero polynomial is ().
"""

from collections import namedtuple
from fractions import Fraction
from math import gcd, isqrt, lcm

from .matrix import Matrix
from .rational import format_rational, parse_rational


class Poly:
    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        c = [parse_rational(x) for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.coeffs = tuple(c)

    @classmethod
    def X(cls):
        return cls((0, 1))

    @classmethod
    def monomial(cls, k, c=1):
        return cls((0,) * k + (c,))

    @classmethod
    def constant(cls, c):
        return cls((c,))

    @property
    def degree(self):
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def leading(self):
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def __bool__(self):
        return bool(self.coeffs)

    def __getitem__(self, i):
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else Fraction(0)

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other):
        other = _coerce(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return Poly(self[i] + other[i] for i in range(n))

    __radd__ = __add__

    def __neg__(self):
        return Poly(-c for c in self.coeffs)

    def __sub__(self, other):
        return self + (-_coerce(other))

    def __rsub__(self, other):
        return _coerce(other) - self

    def __mul__(self, other):
        other = _coerce(other)
        if not self or not other:
            return Poly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, k):
        result = Poly((1,))
        for _ in range(k):
            result = result * self
        return result

    def __divmod__(self, other):
        other = _coerce(other)
        if not other:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = len(rem) - len(other.coeffs) + 1
        if dq <= 0:
            return Poly(), Poly(rem)
        quot = [Fraction(0)] * dq
        lc = other.leading
        d = other.degree
        for k in range(dq - 1, -1, -1):
            c = rem[k + d] / lc
            quot[k] = c
            if c:
                for j, b in enumerate(other.coeffs):
                    rem[k + j] -= c * b
        return Poly(quot), Poly(rem[:d])

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def monic(self):
        if not self:
            return self
        lc = self.leading
        return Poly(c / lc for c in self.coeffs)

    def derivative(self):
        return Poly(i * c for i, c in enumerate(self.coeffs) if i)

    def low_order(self):
        """Multiplicity of 0 as a root (number of vanishing low coefficients)."""
        for i, c in enumerate(self.coeffs):
            if c:
                return i
        raise ValueError("zero polynomial has no finite root multiplicity")

    def __call__(self, x):
        """Evaluate at a rational or a square Matrix (Horner)."""
        if isinstance(x, Matrix):
            n = x.dim
            acc = Matrix.zero(n)
            for c in reversed(self.coeffs):
                acc = acc @ x + Matrix.scalar(n, c)
            return acc
        x = parse_rational(x)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def to_strings(self):
        return [format_rational(c) for c in self.coeffs]

    def __repr__(self):
        return f"Poly({self.to_strings()!r})"

    def __str__(self):
        if not self:
            return "0"
        terms = []
        for i in range(self.degree, -1, -1):
            c = self.coeffs[i]
            if not c:
                continue
            mono = "" if i == 0 else ("X" if i == 1 else f"X^{i}")
            if mono and abs(c) == 1:
                coef = ""
            else:
                coef = format_rational(abs(c)) + ("*" if mono else "")
            sign = "-" if c < 0 else "+"
            terms.append((sign, coef + mono))
        head_sign, head = terms[0]
        out = ("-" if head_sign == "-" else "") + head
        for sign, t in terms[1:]:
            out += f" {sign} {t}"
        return out


def _coerce(p):
    return p if isinstance(p, Poly) else Poly((p,))


def poly_gcd(p, q):
    """Monic greatest common divisor (zero if both inputs are zero)."""
    p, q = _coerce(p), _coerce(q)
    while q:
        p, q = q, p % q
    return p.monic()


_POLY_OPS = {
    "add": lambda p, q: p + q,
    "sub": lambda p, q: p - q,
    "mul": lambda p, q: p * q,
    "divmod": lambda p, q: divmod(p, q),
    "gcd": poly_gcd,
    "derivative": lambda p, q=None: p.derivative(),
}


def poly_arith(p, q, op):
    """Dispatch ``op`` in {"add", "sub", "mul", "divmod", "gcd", "derivative"}.

    ``derivative`` ignores ``q``. ``divmod`` returns a (quotient, remainder) pair.
    """
    try:
        fn = _POLY_OPS[op]
    except KeyError:
        raise ValueError(f"unknown polynomial operation {op!r}") from None
    return fn(p) if op == "derivative" else fn(p, q)


def poly_mod_inverse(f, g):
    """Return h with f*h = 1 (mod g) and deg h < deg g, by extended Euclid.

    Raises ValueError when gcd(f, g) is not a unit.
    """
    f, g = _coerce(f), _coerce(g)
    if not g:
        raise ZeroDivisionError("modulus is the zero polynomial")
    r0, r1 = g, f % g
    s0, s1 = Poly(), Poly((1,))
    while r1:
        q, r = divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
    if r0.degree > 0:
        raise ValueError(f"{f} is not invertible modulo {g}: common factor {r0.monic()}")
    return (s0 * (1 / r0.leading)) % g


def is_square_free(p):
    return poly_gcd(p, p.derivative()).degree <= 0


RootReport = namedtuple("RootReport", "roots splits cofactor")
RootReport.__doc__ = """Rational roots of a polynomial.

roots: tuple of (root, multiplicity) in ascending order of root.
splits: True when the polynomial is a constant times the product of its
    linear factors over Q.
cofactor: what remains after dividing out every rational root (monic).
"""


def _divisors(n):
    n = abs(n)
    small, large = [], []
    for d in range(1, isqrt(n) + 1):
        if n % d == 0:
            small.append(d)
            if d != n // d:
                large.append(n // d)
    return small + large[::-1]


def _primitive_integer(p):
    den = lcm(*(c.denominator for c in p.coeffs))
    ints = [int(c * den) for c in p.coeffs]
    g = 0
    for v in ints:
        g = gcd(g, v)
    return [v // g for v in ints]


def rational_roots(g):
    """Find every rational root of ``g`` with multiplicity.

    Uses the rational-root theorem on the primitive integer multiple of ``g``
    and deflates by exact division, so repeated roots are counted once per
    factor removed.
    """
    g = _coerce(g)
    if not g:
        raise ValueError("the zero polynomial has every number as a root")
    roots = []
    rest = g.monic()
    z = rest.low_order()
    if z:
        roots.append((Fraction(0), z))
        rest = Poly(rest.coeffs[z:])
    if rest.degree > 0:
        ints = _primitive_integer(rest)
        candidates = set()
        for p in _divisors(ints[0]):
            for q in _divisors(ints[-1]):
                candidates.add(Fraction(p, q))
                candidates.add(Fraction(-p, q))
        for r in sorted(candidates):
            lin = Poly((-r, 1))
            mult = 0
            while rest.degree > 0:
                quot, rem = divmod(rest, lin)
                if rem:
                    break
                rest = quot
                mult += 1
            if mult:
                roots.append((r, mult))
            if rest.degree == 0:
                break
    roots.sort()
    return RootReport(tuple(roots), rest.degree == 0, rest.monic())
