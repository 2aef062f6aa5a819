"""Perfect matchings of pinecones: enumeration, weights, heights.

A matching is a frozenset of edges in the pinecone's own coordinate
frame.  The weighting scheme turns the matching sum into a Laurent
polynomial: each edge contributes 1/(x_i x_j) for the labels of the two
faces it straddles, each matching carries y_i to the power of the
number of cycles of M xor M_minus enclosing each face labeled i, and
the whole graph is scaled by the covering monomial built from its
interior faces and the surrounding ring of open faces.
"""

from __future__ import annotations

from bisect import bisect_left

from .laurent import LaurentPolynomial
from .pinecone import PineconeStructureError, graph_vertices


class MatchingError(RuntimeError):
    """A matching-level invariant failed."""


# ----------------------------------------------------------------------
# enumeration and counting

def enumerate_matchings(edges):
    """All perfect matchings of the edge set, in a deterministic order.

    Recursive branching on the smallest unmatched vertex.  The empty
    graph has exactly one (empty) matching.
    """
    edges = sorted(edges)
    adj = {}
    for e in edges:
        u, v = e
        adj.setdefault(u, []).append((v, e))
        adj.setdefault(v, []).append((u, e))
    verts = sorted(adj)
    out = []
    chosen = []
    matched = set()

    def rec(start):
        i = start
        while i < len(verts) and verts[i] in matched:
            i += 1
        if i == len(verts):
            out.append(frozenset(chosen))
            return
        v = verts[i]
        for u, e in adj[v]:
            if u in matched:
                continue
            matched.add(v)
            matched.add(u)
            chosen.append(e)
            rec(i + 1)
            chosen.pop()
            matched.discard(v)
            matched.discard(u)

    rec(0)
    return out


def matching_count_permanent(edges):
    """Number of perfect matchings as a bipartite permanent.

    Row expansion over the white vertices with memoization on the set
    of used black vertices; an independent oracle for the enumerator.
    """
    edges = frozenset(edges)
    if not edges:
        return 1
    whites = sorted(v for v in graph_vertices(edges) if (v[0] + v[1]) % 2 == 0)
    blacks = sorted(v for v in graph_vertices(edges) if (v[0] + v[1]) % 2 == 1)
    if len(whites) != len(blacks):
        return 0
    index = {b: i for i, b in enumerate(blacks)}
    nbrs = [[] for _ in whites]
    for u, v in edges:
        w, b = (u, v) if (u[0] + u[1]) % 2 == 0 else (v, u)
        nbrs[whites.index(w)].append(index[b])
    memo = {}

    def rec(i, used):
        if i == len(whites):
            return 1
        key = (i, used)
        if key in memo:
            return memo[key]
        total = 0
        for j in nbrs[i]:
            bit = 1 << j
            if not used & bit:
                total += rec(i + 1, used | bit)
        memo[key] = total
        return total

    return rec(0, 0)


# ----------------------------------------------------------------------
# the minimal matching and heights

def minimal_matching(g):
    """The bottom element of the matching lattice of a pinecone.

    It consists of horizontal edges only: (i, j)-(i, j+1) with i + j
    even on vertex rows i >= 0 and i + j odd on rows i <= -1.
    """
    if g.empty:
        return frozenset()
    chosen = set()
    for e in g.edges:
        (r1, c1), (r2, c2) = e
        if r1 != r2:
            continue
        j = min(c1, c2)
        if (r1 >= 0 and (r1 + j) % 2 == 0) or (r1 <= -1 and (r1 + j) % 2 == 1):
            chosen.add(e)
    counts = {}
    for e in chosen:
        for v in e:
            counts[v] = counts.get(v, 0) + 1
    if set(counts) != set(g.vertices) or any(c != 1 for c in counts.values()):
        raise MatchingError(f"minimal matching pattern is not perfect on G_{g.n}")
    return frozenset(chosen)


def matching_cycles(g, m, base=None):
    """Cycles of M xor M_minus (or xor an explicit base matching)."""
    if base is None:
        base = minimal_matching(g)
    diff = frozenset(m) ^ frozenset(base)
    adj = {}
    for e in diff:
        u, v = e
        adj.setdefault(u, []).append(v)
        adj.setdefault(v, []).append(u)
    seen = set()
    cycles = []
    for start in sorted(adj):
        if start in seen:
            continue
        cycle = [start]
        seen.add(start)
        prev, cur = None, start
        while True:
            nxt = [w for w in adj[cur] if w != prev]
            step = nxt[0]
            if step == start:
                break
            cycle.append(step)
            seen.add(step)
            prev, cur = cur, step
        cycles.append(cycle)
    return cycles


def _cell_enclosures(g, cycles):
    """Per-cell count of cycles winding around it (ray casting)."""
    counts = {cell: 0 for cell in g.cells}
    for cycle in cycles:
        verticals = {}
        n = len(cycle)
        for t in range(n):
            (r1, c1) = cycle[t]
            (r2, c2) = cycle[(t + 1) % n]
            if c1 == c2:
                row = max(r1, r2)  # vertical spans cell row max(r1, r2)
                verticals.setdefault(row, []).append(c1)
        for row, cols in verticals.items():
            cols.sort()
            for cell in counts:
                if cell[0] != row:
                    continue
                crossings = len(cols) - bisect_left(cols, cell[1] + 1)
                if crossings % 2 == 1:
                    counts[cell] += 1
    return counts


def height_profile(g, m):
    """Map from face (by its cell tuple) to its log height under m."""
    if g.empty:
        return {}
    cycles = matching_cycles(g, m)
    counts = _cell_enclosures(g, cycles)
    return {face.cells: counts[face.cells[0]] for face in g.faces}


def y_of_matching(g, m):
    """The height monomial of a matching as a Laurent polynomial."""
    N = g.spec.N
    ye = [0] * N
    profile = height_profile(g, m)
    for face in g.faces:
        ye[face.label - 1] += profile[face.cells]
    return LaurentPolynomial.monomial(N, [0] * N, ye)


# ----------------------------------------------------------------------
# edge weights and covering monomials

def edge_faces(g, e):
    """Labels of the two ambient faces straddling an edge."""
    (r1, c1), (r2, c2) = sorted(e)
    if r1 == r2:  # horizontal edge on vertex row r1
        j = min(c1, c2)
        below = g.face_covering_cell((r1, j))
        above = g.face_covering_cell((r1 + 1, j))
        return below.label, above.label
    # vertical edge at column c1 between vertex rows r1 < r2
    right = g.face_covering_cell((r2, c1 - 1))
    left = g.face_covering_cell((r2, c1))
    return right.label, left.label


def x_of_matching(g, m):
    """Product over matched edges of 1/(x_i x_j)."""
    N = g.spec.N
    xe = [0] * N
    for e in m:
        i, j = edge_faces(g, e)
        xe[i - 1] -= 1
        xe[j - 1] -= 1
    return LaurentPolynomial.monomial(N, xe, [0] * N)


def open_faces(g):
    """Open faces of the surrounding ring with their shared edge counts.

    Returns a map face-cells -> (label, number of boundary edges shared
    with the graph).
    """
    inner = {face.cells for face in g.faces}
    shared = {}
    labels = {}
    for e in g.edges:
        (r1, c1), (r2, c2) = sorted(e)
        if r1 == r2:
            j = min(c1, c2)
            nbr_cells = [(r1, j), (r1 + 1, j)]
        else:
            nbr_cells = [(r2, c1 - 1), (r2, c1)]
        for cell in nbr_cells:
            face = g.face_covering_cell(cell)
            if face.cells in inner:
                continue
            shared[face.cells] = shared.get(face.cells, 0) + 1
            labels[face.cells] = face.label
    return {cells: (labels[cells], count) for cells, count in shared.items()}


def covering_monomial(g):
    """Covering monomial: interior faces and the ring of open faces.

    Interior squares contribute x_i, interior rectangles x_i^2; an open
    face with label i sharing e edges with the graph contributes
    x_i^ceil(e/2).  The empty pinecone of index n <= N contributes its
    declared outer variable x_n.
    """
    N = g.spec.N
    xe = [0] * N
    if g.empty:
        if not 1 <= g.n <= N:
            raise PineconeStructureError(
                f"empty pinecone index {g.n} has no declared outer face"
            )
        xe[g.n - 1] = 1
        return LaurentPolynomial.monomial(N, xe, [0] * N)
    for face in g.faces:
        xe[face.label - 1] += 1 if face.shape == "square" else 2
    for label, count in open_faces(g).values():
        xe[label - 1] += (count + 1) // 2
    return LaurentPolynomial.monomial(N, xe, [0] * N)


def graph_weight(g):
    """cm(G) times the sum of x(M) y(M) over all perfect matchings.

    The per-matching work is fused into one pass: exponent vectors are
    accumulated directly instead of through polynomial arithmetic, which
    matters once the matching count reaches the tens of thousands.
    """
    N = g.spec.N
    cm = covering_monomial(g)
    if g.empty:
        return cm
    base = minimal_matching(g)
    face_pairs = {e: tuple(k - 1 for k in edge_faces(g, e)) for e in g.edges}
    cells_by_row = {}
    for cell in g.cells:
        cells_by_row.setdefault(cell[0], []).append(cell)
    face_of_cell = {face.cells[0]: face.label - 1 for face in g.faces}
    terms = {}
    for m in enumerate_matchings(g.edges):
        xe = [0] * N
        for e in m:
            i, j = face_pairs[e]
            xe[i] -= 1
            xe[j] -= 1
        ye = [0] * N
        counts = _cell_enclosures_grouped(matching_cycles(g, m, base), cells_by_row)
        for cell, v in counts.items():
            label = face_of_cell.get(cell)
            if label is not None:
                ye[label] += v
        key = (tuple(xe), tuple(ye))
        terms[key] = terms.get(key, 0) + 1
    return cm * LaurentPolynomial(N, terms)


def _cell_enclosures_grouped(cycles, cells_by_row):
    """Ray-cast enclosure counts, visiting only cells in affected rows."""
    counts = {}
    for cycle in cycles:
        verticals = {}
        n = len(cycle)
        for t in range(n):
            (r1, c1) = cycle[t]
            (r2, c2) = cycle[(t + 1) % n]
            if c1 == c2:
                verticals.setdefault(max(r1, r2), []).append(c1)
        for row, cols in verticals.items():
            cols.sort()
            for cell in cells_by_row.get(row, ()):
                crossings = len(cols) - bisect_left(cols, cell[1] + 1)
                if crossings % 2 == 1:
                    counts[cell] = counts.get(cell, 0) + 1
    return counts


# ----------------------------------------------------------------------
# the twist lattice

def face_boundary_cycle(g, face):
    """Vertices of a face in cyclic order."""
    cells = sorted(face.cells, key=lambda c: c[1])
    R = face.row
    lo = cells[0][1]
    hi = cells[-1][1] + 1
    top = [(R, c) for c in range(lo, hi + 1)]
    bottom = [(R - 1, c) for c in range(hi, lo - 1, -1)]
    return top + bottom


def face_edge_sets(g, face):
    """The two alternating edge sets (perfect matchings) of a face."""
    cycle = face_boundary_cycle(g, face)
    n = len(cycle)
    edges = [
        tuple(sorted((cycle[t], cycle[(t + 1) % n]))) for t in range(n)
    ]
    return frozenset(edges[0::2]), frozenset(edges[1::2])


def twistable_faces(g, m):
    """Faces whose boundary is matched alternately, hence twistable."""
    m = frozenset(m)
    out = []
    for face in g.faces:
        first, second = face_edge_sets(g, face)
        if first <= m or second <= m:
            out.append(face)
    return out


def twist(g, m, face):
    """Swap the two perfect matchings of one face inside m."""
    m = frozenset(m)
    first, second = face_edge_sets(g, face)
    if first <= m:
        return (m - first) | second
    if second <= m:
        return (m - second) | first
    raise MatchingError(f"face at {face.cells} is not twistable")


def twist_up(g, m, face):
    """The twist direction that raises the height at exactly this face.

    Returns the twisted matching if the twist is an up-twist at the
    face, otherwise None.
    """
    try:
        other = twist(g, m, face)
    except MatchingError:
        return None
    before = height_profile(g, m)
    after = height_profile(g, other)
    delta = {cells: after[cells] - before[cells] for cells in before}
    if delta[face.cells] == 1 and all(
        v == (1 if cells == face.cells else 0) for cells, v in delta.items()
    ):
        return other
    return None


def total_height(g, m):
    return sum(height_profile(g, m).values())


def descend_to_minimal(g, m):
    """Repeatedly apply height-lowering twists until none applies."""
    current = frozenset(m)
    h = total_height(g, current)
    improved = True
    while improved:
        improved = False
        for face in twistable_faces(g, current):
            candidate = twist(g, current, face)
            hc = total_height(g, candidate)
            if hc < h:
                current, h = candidate, hc
                improved = True
                break
    return current


__all__ = [
    "MatchingError",
    "enumerate_matchings",
    "matching_count_permanent",
    "minimal_matching",
    "matching_cycles",
    "height_profile",
    "y_of_matching",
    "edge_faces",
    "x_of_matching",
    "open_faces",
    "covering_monomial",
    "graph_weight",
    "face_boundary_cycle",
    "face_edge_sets",
    "twistable_faces",
    "twist",
    "twist_up",
    "total_height",
    "descend_to_minimal",
]
