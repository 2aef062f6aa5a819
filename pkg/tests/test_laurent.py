"""Ring axioms, exact division, and serialization of Laurent polynomials."""

import pytest
from hypothesis import given, settings, strategies as st

from galerob.laurent import (
    DimensionMismatchError,
    EvaluationError,
    ExactDivisionError,
    LaurentPolynomial,
)

N_VARS = 3


def exponents():
    return st.tuples(*[st.integers(-3, 3) for _ in range(N_VARS)])


@st.composite
def polys(draw, max_terms=4):
    terms = {}
    for _ in range(draw(st.integers(0, max_terms))):
        key = (draw(exponents()), draw(exponents()))
        terms[key] = draw(st.integers(-9, 9))
    return LaurentPolynomial(N_VARS, terms)


@settings(max_examples=200, deadline=None)
@given(polys(), polys(), polys())
def test_ring_axioms(p, q, r):
    assert p + q == q + p
    assert (p + q) + r == p + (q + r)
    assert p * q == q * p
    assert (p * q) * r == p * (q * r)
    assert p * (q + r) == p * q + p * r
    zero = LaurentPolynomial.zero(N_VARS)
    one = LaurentPolynomial.one(N_VARS)
    assert p + zero == p
    assert p * one == p
    assert p + (-p) == zero
    assert p - q == p + (-q)


@settings(max_examples=200, deadline=None)
@given(polys(), polys())
def test_exact_division_round_trip(p, q):
    if q.is_zero():
        return
    product = p * q
    assert product.div_exact(q) == p


@settings(max_examples=100, deadline=None)
@given(polys())
def test_json_round_trip(p):
    assert LaurentPolynomial.from_json(p.to_json()) == p


def test_division_failure_is_detected():
    x1 = LaurentPolynomial.x_var(N_VARS, 1)
    x2 = LaurentPolynomial.x_var(N_VARS, 2)
    with pytest.raises(ExactDivisionError):
        (x1 + x2).div_exact(x1 + LaurentPolynomial.one(N_VARS))


def test_monomial_inverse():
    m = LaurentPolynomial.monomial(N_VARS, [2, -1, 0], [0, 1, 0], 1)
    assert m * m.inverse_monomial() == LaurentPolynomial.one(N_VARS)


def test_specialization():
    # x1*y2 + 2 at x=(3,1,1), y=(1,5,1) is 15 + 2
    p = LaurentPolynomial.x_var(N_VARS, 1) * LaurentPolynomial.y_var(
        N_VARS, 2
    ) + LaurentPolynomial.const(N_VARS, 2)
    assert p.specialize([3, 1, 1], [1, 5, 1]) == 17
    assert p.specialize([1, 1, 1]) == 3


def test_specialize_rejects_zero_with_negative_exponent():
    p = LaurentPolynomial.x_var(N_VARS, 1, -1)
    with pytest.raises(EvaluationError):
        p.specialize([0, 1, 1])


def test_dimension_mismatch_is_rejected():
    p = LaurentPolynomial.one(2)
    q = LaurentPolynomial.one(3)
    with pytest.raises((DimensionMismatchError, TypeError)):
        p * q
