"""Condensation on pinecones: the matching bijection and its identities.

Deleting pairs of the four distinguished corner vertices a, b, c, d of
a pinecone G leaves graphs whose cores are smaller pinecones.  The
superposition of a matching of G with a matching of the four-corner
deletion decomposes into doubled edges, two open paths through the
corners, and closed cycles; splitting the paths by parity and the
cycles by a fixed convention yields either a (north, south) or a
(west, east) pair of matchings.  This bijection is the combinatorial
engine behind the recurrence satisfied by the weighted matching sums.
"""

from __future__ import annotations

from .laurent import LaurentPolynomial
from .pinecone import subpinecone
from .matching import (
    covering_monomial,
    enumerate_matchings,
    graph_weight,
    height_profile,
    x_of_matching,
    y_of_matching,
)
from .sequences import d


class CondensationError(RuntimeError):
    """The superposition did not decompose as expected."""


def _components(edges):
    """Split an edge set of maximum degree 2 into paths and cycles.

    Paths are returned as ordered edge lists together with their
    endpoint vertices; cycles as edge lists.
    """
    adj = {}
    for e in edges:
        u, v = e
        adj.setdefault(u, []).append((v, e))
        adj.setdefault(v, []).append((u, e))
    seen_edges = set()
    paths = []
    cycles = []

    def walk(start, first):
        """Follow the component from a degree-1 vertex (or around a cycle)."""
        order = []
        cur, via = start, first
        while True:
            order.append(via)
            seen_edges.add(via)
            cur = via[0] if via[1] == cur else via[1]
            nxt = [(w, e) for w, e in adj[cur] if e not in seen_edges]
            if not nxt:
                return order, cur
            via = nxt[0][1]

    for v in sorted(adj):
        if len(adj[v]) == 1:
            _, e = adj[v][0]
            if e in seen_edges:
                continue
            order, end = walk(v, e)
            paths.append((v, end, order))
    for v in sorted(adj):
        for _, e in adj[v]:
            if e not in seen_edges:
                order, end = walk(v, e)
                if end != v:
                    raise CondensationError("open walk in a cycle component")
                cycles.append(order)
    return paths, cycles


def _parity_split(path_edges):
    """Odd- and even-position edges of an ordered path (1-based)."""
    odd = {e for t, e in enumerate(path_edges) if t % 2 == 0}
    even = {e for t, e in enumerate(path_edges) if t % 2 == 1}
    return odd, even


def _subpinecones(g):
    return {which: subpinecone(g, which) for which in "CSWNE"}


def _structural_keys(g, branch):
    """Deletion letters whose graphs carry the matchings of a branch.

    For a single-square central strip (k = 0) all four cores are empty
    and the correspondence between the path pairing and the recurrence
    terms crosses over: the {a,b}/{c,d} pairing then belongs to the
    r-indexed cores and vice versa.
    """
    straight = ("N", "S") if branch == "NS" else ("W", "E")
    crossed = ("W", "E") if branch == "NS" else ("N", "S")
    return straight if g.k >= 1 else crossed


def delta_forward(g, m_a, m_c, convention=1, subs=None):
    """Map a pair (matching of G, matching of the center core) onward.

    Returns (branch, m_first, m_second) where branch is "NS" or "WE"
    and the outputs are matchings of the corresponding cores in their
    own canonical coordinates.  The cycle convention sends the halves
    coming from m_a to the first output (convention 1) or the second
    (convention 2).
    """
    if convention not in (1, 2):
        raise ValueError("convention must be 1 or 2")
    if subs is None:
        subs = _subpinecones(g)
    corners = g.corners
    a, b, c, dd = corners["a"], corners["b"], corners["c"], corners["d"]
    m_a = frozenset(m_a)
    hat_c = subs["C"].lift_matching(m_c)
    doubled = m_a & hat_c
    sym = m_a ^ hat_c
    paths, cycles = _components(sym)
    ends = {frozenset((p, q)) for p, q, _ in paths}
    if ends == {frozenset((a, b)), frozenset((c, dd))}:
        structural = ("N", "S")
        pairing = ((a, b), (c, dd))
    elif ends == {frozenset((a, dd)), frozenset((b, c))}:
        structural = ("W", "E")
        pairing = ((a, dd), (b, c))
    else:
        raise CondensationError(f"unexpected path endpoints {sorted(ends)}")
    branch = "NS" if (structural == ("N", "S")) == (g.k >= 1) else "WE"
    by_ends = {frozenset((p, q)): (p, q, order) for p, q, order in paths}
    first = set(doubled)
    second = set(doubled)
    # the path through a contributes odd edges (counted from a) to the
    # first output, the other path contributes even edges
    p, q, order = by_ends[frozenset(pairing[0])]
    if p != a:
        order = list(reversed(order))
    odd, even = _parity_split(order)
    first |= odd
    second |= even
    p, q, order = by_ends[frozenset(pairing[1])]
    odd, even = _parity_split(order)
    first |= even
    second |= odd
    for cycle in cycles:
        half_a = {e for e in cycle if e in m_a}
        half_c = {e for e in cycle if e in hat_c}
        if convention == 1:
            first |= half_a
            second |= half_c
        else:
            first |= half_c
            second |= half_a
    k1, k2 = structural
    return branch, subs[k1].restrict_matching(first), subs[k2].restrict_matching(second)


def delta_backward(g, branch, m_first, m_second, convention=1, subs=None):
    """Inverse of delta_forward for the same cycle convention."""
    if convention not in (1, 2):
        raise ValueError("convention must be 1 or 2")
    if branch not in ("NS", "WE"):
        raise ValueError(f"unknown branch {branch!r}")
    if subs is None:
        subs = _subpinecones(g)
    first_key, second_key = _structural_keys(g, branch)
    hat_first = subs[first_key].lift_matching(m_first)
    hat_second = subs[second_key].lift_matching(m_second)
    doubled = hat_first & hat_second
    sym = hat_first ^ hat_second
    paths, cycles = _components(sym)
    if len(paths) != 2:
        raise CondensationError(f"expected two open paths, got {len(paths)}")
    m_a = set(doubled)
    hat_c = set(doubled)
    for _, _, order in paths:
        odd, even = _parity_split(order)
        m_a |= odd
        hat_c |= even
    for cycle in cycles:
        half_first = {e for e in cycle if e in hat_first}
        half_second = {e for e in cycle if e in hat_second}
        chosen = half_first if convention == 1 else half_second
        other = half_second if convention == 1 else half_first
        m_a |= chosen
        hat_c |= other
    return frozenset(m_a), subs["C"].restrict_matching(hat_c)


# ----------------------------------------------------------------------
# verification of the condensation identities

def _core_matchings(sp):
    return enumerate_matchings(sp.pinecone.edges)


def verify_bijection(g, convention=1):
    """Round-trip every (m_a, m_c) pair and check the pairing counts.

    Returns the number of pairs sent to each branch; raises if any
    round trip fails or an output is not a valid core matching.
    """
    subs = _subpinecones(g)
    pool = {which: set(map(frozenset, _core_matchings(subs[which]))) for which in "SWNE"}
    counts = {"NS": 0, "WE": 0}
    for m_a in enumerate_matchings(g.edges):
        for m_c in _core_matchings(subs["C"]):
            branch, m1, m2 = delta_forward(g, m_a, m_c, convention, subs)
            k1, k2 = ("N", "S") if branch == "NS" else ("W", "E")
            if m1 not in pool[k1] or m2 not in pool[k2]:
                raise CondensationError(
                    f"output of G_{g.n} {branch} is not a core matching"
                )
            back_a, back_c = delta_backward(g, branch, m1, m2, convention, subs)
            if back_a != frozenset(m_a) or back_c != frozenset(m_c):
                raise CondensationError(f"round trip failed on G_{g.n} ({branch})")
            counts[branch] += 1
    return counts


def verify_cardinality(g):
    """|M(G)| |M(G_C)| == |M(G_N)| |M(G_S)| + |M(G_W)| |M(G_E)|."""
    subs = _subpinecones(g)
    size = {which: len(_core_matchings(subs[which])) for which in "CSWNE"}
    total = len(enumerate_matchings(g.edges))
    return total * size["C"] == size["N"] * size["S"] + size["W"] * size["E"]


def _placed_profile(sp, m):
    """Height profile of a core matching, keyed by parent-frame faces."""
    prof = height_profile(sp.pinecone, m)
    dr, dc = sp.offset
    return {
        tuple((r + dr, c + dc) for r, c in cells): v for cells, v in prof.items()
    }


def verify_height_identity(g, m_a, m_c, convention=1, subs=None):
    """Face-by-face height comparison across the bijection.

    On the NS branch the heights of the outputs fall short of those of
    the inputs by exactly 1 on every central-strip face; on the WE
    branch they agree everywhere.
    """
    if subs is None:
        subs = _subpinecones(g)
    branch, m1, m2 = delta_forward(g, m_a, m_c, convention, subs)
    k1, k2 = ("N", "S") if branch == "NS" else ("W", "E")
    left = height_profile(g, m_a)
    for cells, v in _placed_profile(subs["C"], m_c).items():
        left[cells] = left.get(cells, 0) + v
    right = {cells: 0 for cells in left}
    for key, m in ((k1, m1), (k2, m2)):
        for cells, v in _placed_profile(subs[key], m).items():
            right[cells] = right.get(cells, 0) + v
    central = {face.cells for face in g.central_strip_faces()}
    for face in g.faces:
        cells = face.cells
        bump = 1 if (branch == "NS" and cells in central) else 0
        if left.get(cells, 0) != right.get(cells, 0) + bump:
            raise CondensationError(
                f"height identity fails on G_{g.n} at face {cells} ({branch})"
            )
    return branch


def coefficient_monomial(spec, n):
    """The monomial prod_i y_i^(d(n - N - i, r, N - r))."""
    N = spec.N
    ye = [d(n - N - i, spec.r, N - spec.r) for i in range(1, N + 1)]
    return LaurentPolynomial.monomial(N, [0] * N, ye)


def verify_weight_identity(g, m_a, m_c, convention=1, subs=None):
    """Per-pair weighted form of the bijection.

    cm(G) cm(G_C) x(M_A) x(M_C) equals cm(G_1) cm(G_2) x(M_1) x(M_2)
    for the output pair, and the height monomials satisfy
    y(M_A) y(M_C) == coeff * y(M_1) y(M_2) with the coefficient
    monomial present exactly on the NS branch.
    """
    if subs is None:
        subs = _subpinecones(g)
    branch, m1, m2 = delta_forward(g, m_a, m_c, convention, subs)
    k1, k2 = ("N", "S") if branch == "NS" else ("W", "E")
    g_c, g_1, g_2 = subs["C"].pinecone, subs[k1].pinecone, subs[k2].pinecone
    lhs_x = (
        covering_monomial(g) * covering_monomial(g_c)
        * x_of_matching(g, m_a) * x_of_matching(g_c, m_c)
    )
    rhs_x = (
        covering_monomial(g_1) * covering_monomial(g_2)
        * x_of_matching(g_1, m1) * x_of_matching(g_2, m2)
    )
    if lhs_x != rhs_x:
        raise CondensationError(f"x-weight identity fails on G_{g.n} ({branch})")
    lhs_y = y_of_matching(g, m_a) * y_of_matching(g_c, m_c)
    rhs_y = y_of_matching(g_1, m1) * y_of_matching(g_2, m2)
    if branch == "NS":
        rhs_y = rhs_y * coefficient_monomial(g.spec, g.n)
    if lhs_y != rhs_y:
        raise CondensationError(f"y-weight identity fails on G_{g.n} ({branch})")
    return branch


def verify_weight_recurrence(spec, n, builder=None):
    """w(G_n) w(G_{n-N}) == w(G_{n-r}) w(G_{n-N+r}) + coeff * w(G_{n-s}) w(G_{n-N+s}).

    The graphs are built independently for each index; `builder` maps a
    spec and an index to a pinecone (defaults to the strip construction).
    """
    if builder is None:
        from .pinecone import build_pinecone as builder
    N, r, s = spec.N, spec.r, spec.s
    w = {m: graph_weight(builder(spec, m)) for m in
         {n, n - N, n - r, n - N + r, n - s, n - N + s}}
    lhs = w[n] * w[n - N]
    rhs = w[n - r] * w[n - N + r] + coefficient_monomial(spec, n) * w[n - s] * w[n - N + s]
    return lhs == rhs


__all__ = [
    "CondensationError",
    "delta_forward",
    "delta_backward",
    "verify_bijection",
    "verify_cardinality",
    "verify_height_identity",
    "verify_weight_identity",
    "verify_weight_recurrence",
    "coefficient_monomial",
]
