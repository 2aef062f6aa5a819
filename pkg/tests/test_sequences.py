"""Recurrence values, the partition function d, and parameter validation."""

import pytest
from hypothesis import given, settings, strategies as st

from galerob.sequences import (
    CommonFactorError,
    GRSpec,
    ParameterOrderError,
    d,
    d_popoviciu,
    gr_recurrence_principal,
    gr_sequence_plain,
    principal_y_exponents,
)

SOMOS4 = GRSpec(1, 2, 4)
SOMOS5 = GRSpec(1, 2, 5)
SPEC237 = GRSpec(2, 3, 7)

# values recomputed by hand from the recurrence with all-ones initials
SOMOS4_TAIL = [2, 3, 7, 23, 59, 314, 1529, 8209, 83313]
SOMOS5_TAIL = [2, 3, 5, 11, 37, 83, 274, 1217, 6161]
SPEC237_TAIL = [2, 2, 3, 4, 7, 14, 26]


def test_somos4_values():
    assert gr_sequence_plain(SOMOS4, 13) == [1] * 4 + SOMOS4_TAIL


def test_somos5_values():
    assert gr_sequence_plain(SOMOS5, 14) == [1] * 5 + SOMOS5_TAIL


def test_237_values():
    assert gr_sequence_plain(SPEC237, 14) == [1] * 7 + SPEC237_TAIL


def test_custom_initial_values():
    seq = gr_sequence_plain(SOMOS4, 5, initial=[1, 2, 1, 3])
    # x_5 = (x_2*x_4 + x_3^2) / x_1
    assert seq[4] == (2 * 3 + 1) // 1


@pytest.mark.parametrize("a,b", [(1, 3), (2, 5), (2, 3), (3, 4)])
def test_d_matches_popoviciu(a, b):
    for m in range(0, 201):
        assert d(m, a, b) == d_popoviciu(m, a, b)


@settings(max_examples=200, deadline=None)
@given(st.integers(0, 300), st.integers(1, 9), st.integers(1, 9))
def test_d_shift_identity(m, a, b):
    assert d(m, a, b) == d(m - a, a, b) + (1 if m % b == 0 else 0)


def test_d_negative_is_zero():
    assert d(-1, 2, 3) == 0
    assert d(-7, 1, 1) == 0


@pytest.mark.parametrize(
    "r,s,N,exc",
    [
        (2, 4, 6, CommonFactorError),
        (3, 2, 7, ParameterOrderError),
        (2, 5, 7, ParameterOrderError),
        (0, 2, 5, ParameterOrderError),
        (2, 2, 5, ParameterOrderError),
    ],
)
def test_parameter_validation(r, s, N, exc):
    with pytest.raises(exc):
        GRSpec(r, s, N)


def test_r_equals_s_at_half_N_is_allowed():
    GRSpec(1, 1, 2)


def test_principal_specializes_to_plain():
    for spec, hi in ((SOMOS4, 12), (SOMOS5, 13), (SPEC237, 15)):
        plain = gr_sequence_plain(spec, hi)
        principal = gr_recurrence_principal(spec, hi)
        ones = [1] * spec.N
        assert [p.specialize(ones, ones) for p in principal] == plain


def test_y_exponents_are_d_values():
    spec = SPEC237
    n = 16
    exps = principal_y_exponents(spec, n)
    assert exps == [d(n - spec.N - i, spec.r, spec.N - spec.r) for i in range(1, 8)]


def test_principal_terms_have_positive_coefficients():
    for poly in gr_recurrence_principal(SOMOS4, 11):
        assert all(c > 0 for c in poly.terms.values())
