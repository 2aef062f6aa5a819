"""Pinecone construction, subgraph placement, and forced-edge structure."""

import pytest

from galerob.sequences import GRSpec, d
from galerob.pinecone import (
    CORNER_DELETIONS,
    PineconeStructureError,
    build_pinecone,
    build_pinecone_aztec,
    catalog_forced_edges,
    central_strip_label_counts,
    classify_edges,
    forced_edges,
    graph_vertices,
    has_perfect_matching,
    strip_left_label,
    strip_right_label,
    strip_width,
    sub_index,
    subpinecone,
    verify_borders,
)
from galerob.tiling import vertex_is_white

SPECS = [GRSpec(1, 2, 4), GRSpec(1, 2, 5), GRSpec(2, 3, 7)]


@pytest.mark.parametrize("spec", SPECS, ids=str)
def test_strip_metadata(spec):
    N, r = spec.N, spec.r
    for n in range(N + 1, N + 10):
        assert strip_width(spec, n) == 2 * ((n - N - 1) // r) + 1
        assert strip_left_label(spec, n) == ((n - N - 1) % r) + 1
        assert strip_right_label(spec, n) == ((n - N - 1) % (N - r)) + 1


@pytest.mark.parametrize("spec", SPECS, ids=str)
def test_empty_below_threshold(spec):
    for n in range(1, spec.N + 1):
        assert build_pinecone(spec, n).empty


@pytest.mark.parametrize("spec", SPECS, ids=str)
def test_strips_equal_aztec_core(spec):
    for n in range(spec.N + 1, spec.N + 11):
        strips = build_pinecone(spec, n)
        aztec = build_pinecone_aztec(spec, n)
        assert strips.cells == aztec.cells, f"n={n}"
        assert strips.edges == aztec.edges, f"n={n}"


@pytest.mark.parametrize("spec", SPECS, ids=str)
def test_central_strip_label_counts_are_d_values(spec):
    N, r = spec.N, spec.r
    for n in range(N + 1, N + 11):
        counts = central_strip_label_counts(spec, n)
        for i in range(1, N + 1):
            assert counts[i] == d(n - N - i, r, N - r), f"n={n} label={i}"


@pytest.mark.parametrize("spec", SPECS, ids=str)
def test_border_identities(spec):
    for n in range(spec.N + 1, spec.N + 10):
        assert verify_borders(spec, n)


@pytest.mark.parametrize("spec", SPECS, ids=str)
def test_corner_colors(spec):
    # the a and c corners are black, b and d white, for every size
    for n in range(spec.N + 1, spec.N + 8):
        corners = build_pinecone(spec, n).corners
        assert not vertex_is_white(corners["a"])
        assert not vertex_is_white(corners["c"])
        assert vertex_is_white(corners["b"])
        assert vertex_is_white(corners["d"])


@pytest.mark.parametrize("spec", SPECS, ids=str)
def test_subpinecone_structure(spec):
    """Core placement, forced complement, and matching lift round trip."""
    for n in range(spec.N + 1, spec.N + 9):
        g = build_pinecone(spec, n)
        for which in CORNER_DELETIONS:
            sp = subpinecone(g, which)
            assert sp.placed_edges <= sp.edges
            assert not (sp.forced & sp.placed_edges)
            covered = {v for e in sp.forced for v in e}
            assert covered == graph_vertices(sp.edges) - graph_vertices(
                sp.placed_edges
            )
            assert sp.restrict_matching(sp.lift_matching(frozenset())) == frozenset()


@pytest.mark.parametrize("spec", SPECS, ids=str)
def test_forced_edge_catalog_matches_matching_theory(spec):
    for n in range(spec.N + 1, spec.N + 9):
        g = build_pinecone(spec, n)
        for which in CORNER_DELETIONS:
            sp = subpinecone(g, which)
            assert catalog_forced_edges(g, which) == sp.forced, f"n={n} {which}"


def test_sub_indices():
    spec = GRSpec(1, 2, 5)
    n = 12
    assert sub_index(spec, n, "A") == 12
    assert sub_index(spec, n, "C") == 7
    assert sub_index(spec, n, "S") == 10
    assert sub_index(spec, n, "N") == 9
    assert sub_index(spec, n, "W") == 8
    assert sub_index(spec, n, "E") == 11


def test_edge_classification_on_a_path():
    # path a-b-c-d: the end edges are forced only if the middle cannot move
    edges = {((0, 0), (0, 1)), ((0, 1), (0, 2)), ((0, 2), (0, 3))}
    forced, forbidden, core = classify_edges(edges)
    assert forced == {((0, 0), (0, 1)), ((0, 2), (0, 3))}
    assert forbidden == {((0, 1), (0, 2))}
    assert core == set()


def test_classification_on_a_cycle():
    square = {
        ((0, 0), (0, 1)),
        ((0, 1), (-1, 1)),
        ((-1, 1), (-1, 0)),
        ((-1, 0), (0, 0)),
    }
    forced, forbidden, core = classify_edges(square)
    assert forced == set() and forbidden == set()
    assert core == square


def test_has_perfect_matching():
    assert has_perfect_matching({((0, 0), (0, 1))})
    assert not has_perfect_matching({((0, 0), (0, 1)), ((0, 1), (0, 2))})


def test_unknown_deletion_rejected():
    g = build_pinecone(GRSpec(1, 2, 4), 6)
    with pytest.raises(ValueError):
        subpinecone(g, "X")
