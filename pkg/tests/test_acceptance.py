"""End-to-end acceptance gate.

Each test covers one headline guarantee of the package and prints a
single PASS/FAIL line summarizing it.  Everything here is exact integer
or polynomial equality; there are no tolerances.
"""

import random

import pytest

from galerob.laurent import LaurentPolynomial
from galerob.sequences import (
    GRSpec,
    d,
    d_popoviciu,
    gr_recurrence_principal,
    gr_sequence_plain,
)
from galerob.quiver import (
    build_gale_robinson,
    c_vector_closed_form,
    c_vector_direct,
    e_vector,
    f_vector,
    is_periodic,
    is_sign_coherent,
    principal_cluster_variables,
)
from galerob.pinecone import (
    build_pinecone,
    build_pinecone_aztec,
    central_strip_label_counts,
    verify_borders,
)
from galerob.matching import (
    descend_to_minimal,
    enumerate_matchings,
    graph_weight,
    height_profile,
    matching_count_permanent,
    minimal_matching,
    twist,
    twistable_faces,
    y_of_matching,
)
from galerob import kuo

SPECS = [GRSpec(1, 2, 4), GRSpec(1, 2, 5), GRSpec(2, 3, 7)]


def _result(ok, label):
    print(("PASS " if ok else "FAIL ") + label, flush=True)
    assert ok, label


def test_criterion_1_three_way_exactness():
    """Mutation, recurrence, and weighted matchings agree term by term."""
    ok = True
    for spec in SPECS:
        n_max = max(spec.N + 9, 16 if spec.N == 7 else 0)
        rec = gr_recurrence_principal(spec, n_max)
        mut = principal_cluster_variables(spec, n_max)
        for n in range(1, n_max + 1):
            w = graph_weight(build_pinecone(spec, n))
            ok &= w == rec[n - 1] == mut[n - 1]
    _result(ok, "criterion-1 three-way exactness of the three engines")


def test_criterion_2_integer_specialization():
    ok = True
    for spec in SPECS:
        n_max = spec.N + 9
        plain = gr_sequence_plain(spec, n_max)
        ones = [1] * spec.N
        principal = gr_recurrence_principal(spec, n_max)
        ok &= [p.specialize(ones, ones) for p in principal] == plain
    _result(ok, "criterion-2 all-ones specialization matches plain recurrence")


def test_criterion_3_count_oracle():
    ok = True
    checked = 0
    for spec in SPECS:
        for n in range(1, spec.N + 13):
            g = build_pinecone(spec, n)
            if len(g.vertices) > 40:
                continue
            ok &= len(enumerate_matchings(g.edges)) == matching_count_permanent(
                g.edges
            )
            checked += 1
    ok &= checked > 0
    _result(ok, f"criterion-3 enumeration equals permanent on {checked} graphs")


def test_criterion_4_partition_function():
    ok = True
    for a, b in [(1, 3), (2, 5), (2, 3), (3, 4)]:
        for m in range(0, 201):
            ok &= d(m, a, b) == d_popoviciu(m, a, b)
            ok &= d(m, a, b) == d(m - a, a, b) + (1 if m % b == 0 else 0)
    _result(ok, "criterion-4 d equals the closed form and obeys the shift identity")


def test_criterion_5_c_vectors():
    ok = True
    for spec in SPECS:
        r, s, N = spec.r, spec.s, spec.N
        for i in range(1, N + 1):
            for ell in range(3 * N + 1):
                cv = c_vector_direct(r, s, N, i, ell)
                ok &= cv == c_vector_closed_form(r, s, N, i, ell)
                ok &= is_sign_coherent(cv)
        for i_bar in range(1, 3 * N + 1):
            ok &= f_vector(r, N, i_bar) == tuple(
                hi - lo
                for hi, lo in zip(
                    e_vector(r, N, i_bar + N), e_vector(r, N, i_bar + N - r)
                )
            )
    _result(ok, "criterion-5 c-vector closed form, sign-coherence, F-from-E")


def test_criterion_6_periodicity():
    ok = all(is_periodic(build_gale_robinson(s.r, s.s, s.N), 1) for s in SPECS)
    _result(ok, "criterion-6 quivers have period one")


def test_criterion_7_pinecone_structure():
    ok = True
    for spec in SPECS:
        N, r = spec.N, spec.r
        for n in range(N + 1, N + 10):
            strips = build_pinecone(spec, n)
            aztec = build_pinecone_aztec(spec, n)
            ok &= strips.cells == aztec.cells and strips.edges == aztec.edges
            counts = central_strip_label_counts(spec, n)
            ok &= all(
                counts[i] == d(n - N - i, r, N - r) for i in range(1, N + 1)
            )
            ok &= verify_borders(spec, n)
    _result(ok, "criterion-7 strip glue, central-strip counts, border identities")


def test_criterion_8_condensation_suite():
    ok = True
    ranges = [(GRSpec(1, 2, 4), 9), (GRSpec(2, 3, 7), 14)]
    try:
        for spec, n_hi in ranges:
            for n in range(spec.N + 1, n_hi + 1):
                g = build_pinecone(spec, n)
                subs = kuo._subpinecones(g)
                for conv in (1, 2):
                    kuo.verify_bijection(g, conv)
                ok &= kuo.verify_cardinality(g)
                mc_list = enumerate_matchings(subs["C"].pinecone.edges)
                for m_a in enumerate_matchings(g.edges):
                    for m_c in mc_list:
                        for conv in (1, 2):
                            kuo.verify_height_identity(g, m_a, m_c, conv, subs)
                            kuo.verify_weight_identity(g, m_a, m_c, conv, subs)
                ok &= kuo.verify_weight_recurrence(spec, n)
    except kuo.CondensationError:
        ok = False
    _result(ok, "criterion-8 condensation bijection, heights, weight recurrence")


def test_criterion_9_lattice_suite():
    ok = True
    rng = random.Random(0)
    for spec in SPECS:
        for n in range(spec.N + 1, spec.N + 7):
            g = build_pinecone(spec, n)
            matchings = enumerate_matchings(g.edges)
            mmin = minimal_matching(g)
            ok &= y_of_matching(g, mmin) == LaurentPolynomial.one(spec.N)
            for _ in range(3):
                start = matchings[rng.randrange(len(matchings))]
                ok &= descend_to_minimal(g, start) == mmin
            # connectivity under twists from the bottom element
            seen = {mmin}
            frontier = [mmin]
            while frontier:
                cur = frontier.pop()
                for face in twistable_faces(g, cur):
                    nxt = twist(g, cur, face)
                    if nxt not in seen:
                        seen.add(nxt)
                        frontier.append(nxt)
            ok &= seen == set(matchings)
            for _ in range(100):
                m = matchings[rng.randrange(len(matchings))]
                faces = twistable_faces(g, m)
                if not faces:
                    continue
                face = faces[rng.randrange(len(faces))]
                other = twist(g, m, face)
                ok &= twist(g, other, face) == m
                before = height_profile(g, m)
                after = height_profile(g, other)
                delta = {c: after[c] - before[c] for c in before if after[c] != before[c]}
                ok &= set(delta) == {face.cells} and abs(delta[face.cells]) == 1
    _result(ok, "criterion-9 twist lattice: involution, connectivity, minimum")
