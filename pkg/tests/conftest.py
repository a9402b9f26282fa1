import os
import sys
from fractions import Fraction

import pytest
from hypothesis import settings
from hypothesis import strategies as st

sys.path.insert(0, os.path.dirname(__file__))

import oracles  # noqa: E402
from drazinkit import Matrix  # noqa: E402

# Fixed seed for the random property suite; failures reproduce with
# `drazinkit selftest --seed 20240917`.
SEED = 20240917

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")


@pytest.fixture
def example_a():
    return Matrix(oracles.EXAMPLE_A)


def to_matrix(rows):
    return Matrix(rows)


small_ints = st.integers(min_value=-3, max_value=3)


@st.composite
def int_matrices(draw, min_dim=1, max_dim=5):
    n = draw(st.integers(min_dim, max_dim))
    return Matrix([[draw(small_ints) for _ in range(n)] for _ in range(n)])


@st.composite
def unimodular(draw, n):
    """Product of integer elementary matrices; its inverse is integral."""
    m = Matrix.identity(n)
    for _ in range(draw(st.integers(0, 2 * n))):
        i = draw(st.integers(0, n - 1))
        j = draw(st.integers(0, n - 1))
        if i == j:
            continue
        c = draw(st.integers(-2, 2))
        rows = [list(r) for r in Matrix.identity(n).rows]
        rows[i][j] = Fraction(c)
        m = m @ Matrix(rows)
    return m


@st.composite
def eligible_matrices(draw, max_dim=5):
    """S * diag(D, N) * S^-1 with D diagonal nonzero rationals and N strictly upper triangular.

    Every such matrix has a closed-form power sequence over Q, and the
    nilpotent block makes nonzero index common.
    """
    n = draw(st.integers(1, max_dim))
    r = draw(st.integers(0, n))
    nonzero = st.fractions(min_value=-4, max_value=4, max_denominator=3).filter(lambda q: q != 0)
    rows = [[Fraction(0)] * n for _ in range(n)]
    for i in range(r):
        rows[i][i] = draw(nonzero)
    for i in range(r, n):
        for j in range(i + 1, n):
            rows[i][j] = Fraction(draw(st.integers(-2, 2)))
    s = draw(unimodular(n))
    return s @ Matrix(rows) @ s.inverse()


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for name, ok, detail in RESULTS:
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] {name}: {detail}")
