"""Exact rational scalars.

The ground field is Q, represented by :class:`fractions.Fraction`, which
already keeps numerator and denominator coprime with a positive denominator.
This module only adds the strict text form used by the JSON documents:
an integer literal ``"-3"`` or a quotient ``"7/16"``.
"""

import re
from fractions import Fraction
from numbers import Rational

_RATIONAL_RE = re.compile(r"^\s*([+-]?)(\d+)(?:\s*/\s*(\d+))?\s*$")

# U+2212 shows up in hand-typed data copied from typeset sources.
_MINUS_SIGNS = str.maketrans({"−": "-", "–": "-"})


def parse_rational(value):
    """Parse an int, Fraction, or string ``"p"`` / ``"p/q"`` into a Fraction.

    Floats and decimal strings are rejected: every input must be exact.
    """
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, (int, Rational)):
        return Fraction(value)
    if not isinstance(value, str):
        raise TypeError(f"cannot interpret {value!r} as an exact rational")
    m = _RATIONAL_RE.match(value.translate(_MINUS_SIGNS))
    if m is None:
        raise ValueError(f"not an integer or p/q literal: {value!r}")
    sign, num, den = m.groups()
    if den is not None and int(den) == 0:
        raise ValueError(f"zero denominator in {value!r}")
    q = Fraction(int(num), int(den) if den is not None else 1)
    return -q if sign == "-" else q


def format_rational(q):
    """Canonical text: ``"p"`` when the denominator is 1, otherwise ``"p/q"``."""
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"
