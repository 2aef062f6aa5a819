"""Quiver mutation, periodicity, seed mutation, and c-vectors."""

import pytest

from galerob.laurent import LaurentPolynomial
from galerob.quiver import (
    MutationError,
    build_gale_robinson,
    c_vector_closed_form,
    c_vector_direct,
    cluster_variable,
    e_vector,
    f_vector,
    initial_seed,
    is_periodic,
    is_sign_coherent,
    mutate,
    principal_cluster_variables,
    relabel,
    rho,
    seed_mutate,
)
from galerob.sequences import GRSpec, gr_recurrence_principal

SPECS = [(1, 2, 4), (1, 2, 5), (2, 3, 7)]


@pytest.mark.parametrize("r,s,N", SPECS)
def test_skew_symmetry(r, s, N):
    q = build_gale_robinson(r, s, N)
    for i in range(N):
        for j in range(N):
            assert q.b[i][j] == -q.b[j][i]


@pytest.mark.parametrize("r,s,N", SPECS)
def test_mutation_is_involutive(r, s, N):
    q = build_gale_robinson(r, s, N)
    for k in range(1, N + 1):
        assert mutate(mutate(q, k), k) == q


@pytest.mark.parametrize("r,s,N", SPECS)
def test_period_one(r, s, N):
    assert is_periodic(build_gale_robinson(r, s, N), 1)


def test_rho_relabel_round_trip():
    q = build_gale_robinson(2, 3, 7)
    perm = rho(7)
    inverse = {v: k for k, v in perm.items()}
    assert relabel(relabel(q, perm), inverse) == q


def test_mutation_rejects_bad_vertex():
    q = build_gale_robinson(1, 2, 4)
    with pytest.raises(MutationError):
        mutate(q, 0)
    with pytest.raises(MutationError):
        mutate(q, 5)


@pytest.mark.parametrize("r,s,N", SPECS)
def test_seed_mutation_matches_recurrence(r, s, N):
    spec = GRSpec(r, s, N)
    hi = N + 6
    assert principal_cluster_variables(spec, hi) == gr_recurrence_principal(spec, hi)


def test_seed_mutation_is_involutive_on_cluster():
    seed = initial_seed(1, 2, 4)
    back = seed_mutate(seed_mutate(seed, 1), 1)
    assert back.cluster == seed.cluster
    assert back.quiver == seed.quiver


def test_cluster_variables_are_laurent():
    # denominators only involve x variables: y-exponents stay nonnegative
    for poly in principal_cluster_variables(GRSpec(1, 2, 5), 11):
        for (xe, ye) in poly.terms:
            assert all(e >= 0 for e in ye)


def test_cluster_variable_entry_point():
    assert cluster_variable(1, 2, 4, 3) == LaurentPolynomial.x_var(4, 3)


@pytest.mark.parametrize("r,s,N", SPECS)
def test_c_vector_closed_form_matches_direct(r, s, N):
    for i in range(1, N + 1):
        for ell in range(0, 2 * N + 1):
            assert c_vector_closed_form(r, s, N, i, ell) == c_vector_direct(
                r, s, N, i, ell
            )


@pytest.mark.parametrize("r,s,N", SPECS)
def test_c_vectors_sign_coherent(r, s, N):
    for i in range(1, N + 1):
        for ell in range(0, 2 * N + 1):
            assert is_sign_coherent(c_vector_direct(r, s, N, i, ell))


@pytest.mark.parametrize("r,N", [(1, 4), (1, 5), (2, 7)])
def test_f_vector_from_e_vectors(r, N):
    for i_bar in range(1, 3 * N + 1):
        expected = tuple(
            a - b
            for a, b in zip(e_vector(r, N, i_bar + N), e_vector(r, N, i_bar + N - r))
        )
        assert f_vector(r, N, i_bar) == expected
