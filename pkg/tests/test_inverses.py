from fractions import Fraction

import pytest
from hypothesis import given

import oracles
from conftest import eligible_matrices, int_matrices
from drazinkit import (
    Equation,
    Matrix,
    Poly,
    UInverseSpec,
    complete_inverse,
    core_nilpotent,
    drazin_euclid,
    drazin_formula,
    index,
    is_polynomial_in,
    rank,
    spectral_projection_zero,
    u_inverse_check,
)
from drazinkit.inverses import default_n

NILPOTENT = Matrix([[0, 1], [0, 0]])


def _drazin_ok(a, x):
    return u_inverse_check(a, x, UInverseSpec.drazin(default_n(index(a)))).verdict


def _complete_ok(a, z):
    return u_inverse_check(a, z, UInverseSpec.complete(default_n(index(a)))).verdict


# --- specs and reports ----------------------------------------------------

def test_spec_parsing():
    spec = UInverseSpec.parse("1, 4,5", 2)
    assert spec.equations == {Equation.ONE_N, Equation.FOUR, Equation.FIVE}
    assert spec.ordered() == [Equation.ONE_N, Equation.FOUR, Equation.FIVE]
    assert UInverseSpec.parse("1n,3", 1).equations == {Equation.ONE_N, Equation.THREE}


@pytest.mark.parametrize("text, n", [("", 1), ("2", 1), ("1,4", 0)])
def test_spec_rejects(text, n):
    with pytest.raises(ValueError):
        UInverseSpec.parse(text, n)


def test_report_verdict_is_conjunction(example_a):
    z = complete_inverse(example_a)
    spec = UInverseSpec.parse("1,3,4,5", 2)
    report = u_inverse_check(example_a, z, spec)
    assert report.as_labels() == {"1": True, "3": False, "4": True, "5": True}
    assert not report.verdict


def test_u_inverse_dimension_mismatch():
    with pytest.raises(ValueError):
        u_inverse_check(Matrix.identity(2), Matrix.identity(3), UInverseSpec.parse("5", 1))


# --- index ----------------------------------------------------------------

@pytest.mark.parametrize("a, expected", [
    (Matrix.identity(4), 0),
    (NILPOTENT, 2),
    (Matrix(oracles.EXAMPLE_A), 2),
    (Matrix.zero(3), 1),
    (Matrix([[0, 1, 0], [0, 0, 1], [0, 0, 0]]), 3),
])
def test_index(a, expected):
    assert index(a) == expected


@given(int_matrices())
def test_index_bounds(a):
    p = index(a)
    assert 0 <= p <= a.dim
    assert (p == 0) == (rank(a) == a.dim)
    assert rank(a ** (p + 1)) == rank(a ** p)


# --- Drazin routes --------------------------------------------------------

def test_drazin_examples():
    assert drazin_formula(Matrix.identity(3)) == Matrix.identity(3)
    assert drazin_formula(NILPOTENT).is_zero()
    assert drazin_euclid(Matrix([[2, 0], [0, 3]])) == Matrix([["1/2", 0], [0, "1/3"]])
    assert drazin_euclid(Matrix.zero(2)).is_zero()


def test_drazin_of_example(example_a):
    # Evaluating the geometric part with ratios inverted at k = 1.
    expected = Matrix(oracles.drazin_inverse())
    assert drazin_formula(example_a) == expected
    assert drazin_euclid(example_a) == expected
    assert _drazin_ok(example_a, expected)


@given(int_matrices())
def test_routes_agree_random(a):
    assert drazin_formula(a) == drazin_euclid(a)


@given(eligible_matrices())
def test_routes_agree_structured(a):
    x = drazin_formula(a)
    assert x == drazin_euclid(a)
    assert _drazin_ok(a, x)


def test_drazin_of_drazin_is_core(example_a):
    x = drazin_formula(example_a)
    assert drazin_formula(x) == example_a @ example_a @ x


# --- complete inverse -----------------------------------------------------

def test_complete_inverse_example(example_a):
    z = complete_inverse(example_a)
    assert z == Matrix(oracles.complete_inverse_power(1))
    assert _complete_ok(example_a, z)
    assert z == complete_inverse(example_a, route="euclid")


def test_printed_complete_inverse_fails_every_defining_equation(example_a):
    # The printed matrix differs from the unique solution only at (0, 3).
    printed = Matrix(oracles.PRINTED_COMPLETE_INVERSE)
    report = u_inverse_check(example_a, printed, UInverseSpec.complete(2))
    assert report.as_labels() == {"1": False, "4": False, "5": False}
    diff = printed - complete_inverse(example_a)
    assert [(i, j) for i in range(4) for j in range(4) if diff[i, j]] == [(0, 3)]
    assert diff[0, 3] == 1


@pytest.mark.parametrize("a", [
    Matrix([[2, 1], [7, 4]]),
    Matrix([["1/3"]]),
    Matrix([[1, 2, 0], [0, 1, 0], [3, 0, -1]]),
])
def test_complete_inverse_of_invertible_is_inverse(a):
    assert complete_inverse(a) == a.inverse()


@pytest.mark.parametrize("a", [NILPOTENT, Matrix.zero(3), Matrix([[0, 1, 2], [0, 0, 3], [0, 0, 0]])])
def test_complete_inverse_of_nilpotent_is_itself(a):
    assert complete_inverse(a) == a


def test_unknown_route():
    with pytest.raises(ValueError):
        complete_inverse(NILPOTENT, route="jordan")


@given(eligible_matrices())
def test_complete_inverse_structured(a):
    p = index(a)
    x = drazin_formula(a)
    v = a @ a @ x
    z = complete_inverse(a)
    assert z == a + x - v
    assert _complete_ok(a, z)
    assert a.commutes_with(z) and a.commutes_with(x)
    spec = UInverseSpec.complete(default_n(p))
    for k in range(1, 7):
        assert z ** k == a ** k + x ** k - v ** k
        assert u_inverse_check(a ** k, z ** k, spec).verdict
    for m in range(p, p + 5):
        assert v ** m == a ** m
        assert z ** m == x ** m
    assert u_inverse_check(z, v, UInverseSpec.drazin(default_n(p))).verdict
    assert u_inverse_check(x, v, spec).verdict
    assert u_inverse_check(z, a, spec).verdict


@given(int_matrices())
def test_invertibility_equivalence(a):
    z = complete_inverse(a)
    a_inv = rank(a) == a.dim
    assert a_inv == (rank(z) == z.dim)
    if a_inv:
        x = drazin_formula(a)
        assert z == x == a.inverse()
        assert a @ a @ x == a


# --- core-nilpotent split and pi_0 ----------------------------------------

def test_core_nilpotent_examples(example_a):
    a = Matrix([[2, 1], [7, 4]])
    s = core_nilpotent(a)
    assert (s.core, s.nilpotent, s.index) == (a, Matrix.zero(2), 0)
    s = core_nilpotent(NILPOTENT)
    assert (s.core, s.nilpotent, s.index) == (Matrix.zero(2), NILPOTENT, 2)
    s = core_nilpotent(example_a)
    # rank(A^2) = 2: eigenvalue 0 has algebraic multiplicity 2
    assert rank(s.core) == rank(example_a @ example_a) == 2
    assert (s.nilpotent @ s.nilpotent).is_zero() and not s.nilpotent.is_zero()
    assert (s.core @ s.nilpotent).is_zero() and (s.nilpotent @ s.core).is_zero()


@given(eligible_matrices())
def test_core_nilpotent_invariants(a):
    s = core_nilpotent(a)
    assert s.core + s.nilpotent == a
    assert (s.core @ s.nilpotent).is_zero() and (s.nilpotent @ s.core).is_zero()
    assert (s.nilpotent ** max(s.index, 1)).is_zero()
    assert rank(s.core) == rank(a ** s.index)


def test_spectral_projection(example_a):
    assert spectral_projection_zero(Matrix([[2, 1], [7, 4]])).is_zero()
    assert spectral_projection_zero(Matrix.zero(2)) == Matrix.identity(2)
    pi0 = spectral_projection_zero(example_a)
    assert pi0 @ pi0 == pi0
    assert rank(pi0) == 4 - rank(example_a @ example_a) == 2
    assert pi0.commutes_with(example_a)
    assert ((example_a @ pi0) ** 2).is_zero()


# --- polynomial membership ------------------------------------------------

def test_polynomial_in_examples(example_a):
    assert is_polynomial_in(example_a @ example_a, example_a) == Poly([0, 0, 1])
    z = complete_inverse(example_a)
    c = is_polynomial_in(z, example_a)
    assert c is not None and c(example_a) == z
    x = drazin_formula(example_a)
    c = is_polynomial_in(x, z)
    assert c is not None and c(z) == x


def test_polynomial_in_not_expressible():
    # Diagonal generator with repeated eigenvalue: its algebra holds only scalars there.
    assert is_polynomial_in(Matrix([[1, 0], [0, 2]]), Matrix.identity(2)) is None
    assert is_polynomial_in(Matrix([[0, 1], [0, 0]]), Matrix([[1, 0], [0, 2]])) is None


@given(int_matrices())
def test_polynomial_expressibility(a):
    z = complete_inverse(a)
    x = drazin_formula(a)
    cz = is_polynomial_in(z, a)
    cx = is_polynomial_in(x, z)
    assert cz is not None and cz(a) == z
    assert cx is not None and cx(z) == x


def test_index_zero_uses_n_one():
    a = Matrix([[Fraction(2)]])
    assert default_n(index(a)) == 1
    assert _complete_ok(a, complete_inverse(a))
