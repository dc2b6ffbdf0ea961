from __future__ import annotations

import math
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from fusscatalan.scalars import ONE, ZERO, Scalar

from conftest import scalars

B, W, D = Scalar.beta(), Scalar.omega(), Scalar.delta()
points = st.tuples(st.floats(min_value=0.3, max_value=3.0), st.floats(min_value=0.3, max_value=3.0))


def test_addition_examples():
    assert B + ZERO == B
    assert (B + (-1) * B).is_zero()
    assert (B - B) == ZERO
    h = Scalar.monomial(1, Fraction(1, 2), Fraction(1, 2))
    assert h + h == Scalar.monomial(2, Fraction(1, 2), Fraction(1, 2))


def test_multiplication_examples():
    assert Scalar.beta(Fraction(1, 2)) * Scalar.beta(Fraction(1, 2)) == B
    assert D * D.inverse() == ONE
    assert Scalar.delta(Fraction(-1, 2)) * Scalar.delta(Fraction(1, 2)) == ONE
    assert D == B * W


def test_eval_examples():
    assert (D ** 2).eval(2, 2) == pytest.approx(16)
    assert B.inverse().eval(4, 9) == pytest.approx(0.25)
    assert Scalar.monomial(1, Fraction(1, 2), Fraction(1, 2)).eval(2, 8) == pytest.approx(4)


@pytest.mark.parametrize("b0,w0", [(0, 1), (1, -2), (-1, -1)])
def test_eval_rejects_nonpositive(b0, w0):
    with pytest.raises(ValueError):
        B.eval(b0, w0)


def test_inverse_of_sum_rejected():
    with pytest.raises(ZeroDivisionError):
        (B + W).inverse()


@given(scalars(), scalars(), scalars())
def test_ring_axioms(x, y, z):
    assert (x + y) + z == x + (y + z)
    assert x + y == y + x
    assert x * y == y * x
    assert (x * y) * z == x * (y * z)
    assert x * (y + z) == x * y + x * z
    assert x - x == ZERO
    assert x * ONE == x


@given(scalars(), scalars(), points)
def test_eval_is_ring_homomorphism(x, y, pt):
    b0, w0 = pt
    for got, want in [((x + y).eval(b0, w0), x.eval(b0, w0) + y.eval(b0, w0)),
                      ((x * y).eval(b0, w0), x.eval(b0, w0) * y.eval(b0, w0))]:
        assert math.isclose(got, want, rel_tol=1e-12, abs_tol=1e-9)


@given(scalars())
def test_canonical_form_has_no_zero_terms(x):
    assert all(c != 0 for _, c in x.items())
    assert list(x.terms) == sorted(x.terms)


@given(scalars())
def test_text_roundtrip(x):
    assert Scalar.parse(str(x)) == x


def test_text_format():
    assert str(ZERO) == "0"
    assert str(ONE) == "1"
    assert str(B) == "b^(2/2)"
    assert Scalar.parse("d^-2") == Scalar.delta(-2)
    assert Scalar.parse("b^(1/2) * w") == Scalar.monomial(1, Fraction(1, 2), 1)
    assert Scalar.parse("3/4 * b^-1 - w") == Scalar.monomial(Fraction(3, 4), -1, 0) - W


def test_adjoint_is_identity():
    x = B + Scalar.const(Fraction(2, 3)) * W.inverse()
    assert x.adjoint() == x
