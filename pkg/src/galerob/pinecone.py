"""Pinecone subgraphs of the brane tiling.

A pinecone is a finite subgraph of the tiling built from odd-width
horizontal strips glued outward from a central strip, in a staircase:
the strip in cell row R has its rightmost cell in column |R|.  The same
graphs arise by centering an Aztec diamond of cells on the tiling and
trimming pendant vertices; both constructions are implemented and the
test suite checks they agree.

Coordinates are the pinecone convention: the rightmost cell of the
central strip is cell (0, 0) and the upper vertex of the rightmost edge
is vertex (0, 0).  Translation offsets back into the ambient tiling are
kept on the object so face labels can be looked up for any cell, inside
or outside the graph.

The module also carries the small matching-theoretic toolkit (maximum
matching, forced and forbidden edges, cores) used to relate a pinecone
to its four corner-deleted subgraphs.
"""

from __future__ import annotations

from dataclasses import dataclass

from .sequences import GRSpec, d
from .tiling import TilingFace, face_at, face_of_lattice, tiling_edges_for_cells, vertex_label


class PineconeStructureError(RuntimeError):
    """A structural invariant of the pinecone construction failed."""


# ----------------------------------------------------------------------
# strips

def strip_width(spec, n):
    """Cell width of the horizontal strip for index n (0 when empty)."""
    if n <= spec.N:
        return 0
    return 2 * ((n - spec.N - 1) // spec.r) + 1


def strip_left_label(spec, n):
    """Label of the leftmost (square) face of the strip for index n."""
    return (n - spec.N - 1) % spec.r + 1


def strip_right_label(spec, n):
    """Label of the rightmost face of the strip for index n."""
    return (n - spec.N - 1) % (spec.N - spec.r) + 1


def pinecone_rows(spec, n):
    """(cell row, strip index) pairs of the pinecone for n, top to bottom.

    Row +i carries the strip of index n - i*(N-s), row -i the strip of
    index n - i*s; rows stop as soon as the strip is empty.
    """
    rows = [(0, n)]
    i = 1
    while n - i * (spec.N - spec.s) > spec.N:
        rows.append((i, n - i * (spec.N - spec.s)))
        i += 1
    i = 1
    while n - i * spec.s > spec.N:
        rows.append((-i, n - i * spec.s))
        i += 1
    return sorted(rows, reverse=True)


def _anchor_lattice(spec, label):
    """A deterministic lattice point of the unfolded quiver with this label."""
    for B in range(spec.N):
        for A in range(spec.N):
            if vertex_label(spec, A, B) == label:
                return A, B
    raise PineconeStructureError(f"no lattice point labeled {label}")


# ----------------------------------------------------------------------
# the pinecone object

def _translate_cell(cell, offset):
    return (cell[0] + offset[0], cell[1] + offset[1])


def translate_edge(edge, offset):
    (a, b) = edge
    return (_translate_cell(a, offset), _translate_cell(b, offset))


def translate_edges(edges, offset):
    return frozenset(translate_edge(e, offset) for e in edges)


class Pinecone:
    """A placed pinecone graph with its faces, edges and ambient offsets."""

    def __init__(self, spec, n, cells, row_offset=0, col_offset=0):
        self.spec = spec
        self.n = n
        self.cells = frozenset(cells)
        self.row_offset = row_offset
        self.col_offset = col_offset
        if self.cells:
            self.k = (n - spec.N - 1) // spec.r
            ambient = [(r + row_offset, c + col_offset) for (r, c) in self.cells]
            shift = (-row_offset, -col_offset)
            self.edges = translate_edges(
                tiling_edges_for_cells(spec, ambient), shift
            )
            self.faces = self._collect_faces()
        else:
            self.k = None
            self.edges = frozenset()
            self.faces = ()
        self.vertices = frozenset(v for e in self.edges for v in e)

    @property
    def empty(self):
        return not self.cells

    def _collect_faces(self):
        seen = {}
        for cell in self.cells:
            face = self.face_covering_cell(cell)
            seen[face.cells] = face
        for face in seen.values():
            if any(cell not in self.cells for cell in face.cells):
                raise PineconeStructureError(
                    f"cells of G_{self.n} cut the face at {face.cells}"
                )
        return tuple(
            sorted(seen.values(), key=lambda f: (-f.row, f.cells[0][1]))
        )

    def face_covering_cell(self, cell):
        """Ambient tiling face over a (pinecone-coordinate) cell.

        Works for cells outside the graph too, which is how open faces
        around the boundary get their labels.
        """
        ambient = face_at(
            self.spec, (cell[0] + self.row_offset, cell[1] + self.col_offset)
        )
        local = tuple(
            (r - self.row_offset, c - self.col_offset) for (r, c) in ambient.cells
        )
        return TilingFace(label=ambient.label, shape=ambient.shape, cells=local)

    @property
    def corners(self):
        """The four condensation vertices a, b, c, d of the central strip."""
        if self.empty:
            raise PineconeStructureError("empty pinecone has no corners")
        k = self.k
        return {
            "a": (0, 1),
            "b": (0, 2 * k),
            "c": (-1, 2 * k),
            "d": (-1, 1),
        }

    def central_strip_faces(self):
        return tuple(f for f in self.faces if f.row == 0)

    def row_cells(self, row):
        return sorted(c for c in self.cells if c[0] == row)


def build_pinecone(spec, n):
    """The pinecone for index n via the strip-gluing construction."""
    if n < 1:
        raise ValueError("index must be positive")
    if n <= spec.N:
        return Pinecone(spec, n, cells=())
    k = (n - spec.N - 1) // spec.r
    label0 = strip_left_label(spec, n)
    A0, B0 = _anchor_lattice(spec, label0)
    anchor = face_of_lattice(spec, A0, B0)
    if anchor.shape != "square":
        raise PineconeStructureError(
            f"leftmost face of the central strip (label {label0}) is not a square"
        )
    anchor_col = anchor.cells[0][1]
    row_offset = B0
    col_offset = anchor_col - 2 * k

    cells = set()
    rows = pinecone_rows(spec, n)
    for row, m in rows:
        w = strip_width(spec, m)
        for j in range(w):
            cells.add((row, abs(row) + j))
    g = Pinecone(spec, n, cells, row_offset=row_offset, col_offset=col_offset)
    _validate_strips(g, rows)
    return g


def _validate_strips(g, rows):
    spec = g.spec
    widths = {}
    for row, m in rows:
        w = strip_width(spec, m)
        widths[row] = w
        leftmost = g.face_covering_cell((row, abs(row) + w - 1))
        rightmost = g.face_covering_cell((row, abs(row)))
        if leftmost.shape != "square" or leftmost.label != strip_left_label(spec, m):
            raise PineconeStructureError(
                f"strip {m}: leftmost face is {leftmost.shape} labeled "
                f"{leftmost.label}, expected square labeled {strip_left_label(spec, m)}"
            )
        if rightmost.label != strip_right_label(spec, m):
            raise PineconeStructureError(
                f"strip {m}: rightmost face labeled {rightmost.label}, "
                f"expected {strip_right_label(spec, m)}"
            )
    for row, _ in rows:
        if row == 0:
            continue
        inner = row - 1 if row > 0 else row + 1
        lo, hi = abs(row), abs(row) + widths[row] - 1
        lo_in, hi_in = abs(inner), abs(inner) + widths[inner] - 1
        if not (lo_in < lo and hi < hi_in):
            raise PineconeStructureError(
                f"strip at row {row} is not interior to row {inner}"
            )


def build_pinecone_aztec(spec, n):
    """The pinecone for index n via the Aztec-diamond-and-core construction.

    A diamond of cells with central row width 2k+1 is centered k cells
    to the right of the leading square of the central strip; the
    black-square sweep then pares the diamond down to the core.
    """
    if n < 1:
        raise ValueError("index must be positive")
    if n <= spec.N:
        return Pinecone(spec, n, cells=())
    k = (n - spec.N - 1) // spec.r
    label0 = strip_left_label(spec, n)
    A0, B0 = _anchor_lattice(spec, label0)
    anchor = face_of_lattice(spec, A0, B0)
    left_cell = anchor.cells[-1]
    row_offset = B0
    col_offset = left_cell[1] - 2 * k
    center = (left_cell[0] - row_offset, left_cell[1] - col_offset - k)
    diamond = {
        (center[0] + dr, center[1] + dc)
        for dr in range(-k, k + 1)
        for dc in range(-k + abs(dr), k - abs(dr) + 1)
    }
    probe = Pinecone(spec, n, cells=(), row_offset=row_offset, col_offset=col_offset)
    cells = core_cells_by_sweep(probe, diamond)
    return Pinecone(spec, n, cells, row_offset=row_offset, col_offset=col_offset)


def central_strip_label_counts(spec, n):
    """How many faces of each label the central strip of G_n contains."""
    g = build_pinecone(spec, n)
    counts = {i: 0 for i in range(1, spec.N + 1)}
    if g.empty:
        return counts
    for face in g.central_strip_faces():
        counts[face.label] += 1
    return counts


def verify_borders(spec, n):
    """Check the recursive placement identities of the four subgraphs.

    The pinecones of indices n-s, n-(N-s), n-(N-r) and n-r, placed at
    their condensation offsets, are subgraphs of G_n whose pairwise
    north/south and west/east intersections both equal the placed
    pinecone of index n-N; once that center is nonempty the four cover
    G_n.  Raises PineconeStructureError on any failure.
    """
    g = build_pinecone(spec, n)

    def placed(which):
        sub = build_pinecone(spec, sub_index(spec, n, which))
        dr, dc = SUB_PLACEMENT[which]
        return {(r + dr, c + dc) for (r, c) in sub.cells}

    parts = {w: placed(w) for w in ("N", "S", "W", "E", "C")}
    for w in ("N", "S", "W", "E"):
        if not parts[w] <= g.cells:
            raise PineconeStructureError(f"G_{n}: {w} part escapes the pinecone")
    if parts["N"] & parts["S"] != parts["C"]:
        raise PineconeStructureError(f"G_{n}: north/south intersection is not the center")
    if parts["W"] & parts["E"] != parts["C"]:
        raise PineconeStructureError(f"G_{n}: west/east intersection is not the center")
    if n > 2 * spec.N:
        union = parts["N"] | parts["S"] | parts["W"] | parts["E"]
        if union != g.cells:
            raise PineconeStructureError(f"G_{n}: four parts do not cover the pinecone")
    return True


# ----------------------------------------------------------------------
# matching-theoretic toolkit on plain edge sets

def graph_vertices(edges):
    return frozenset(v for e in edges for v in e)


def maximum_matching(edges):
    """Maximum matching of a bipartite grid graph as a dict vertex -> mate.

    Vertices (a, b) with a + b even form one side.  Standard augmenting
    path search; graphs here have at most a few hundred vertices.
    """
    adj = {}
    for u, v in edges:
        adj.setdefault(u, []).append(v)
        adj.setdefault(v, []).append(u)
    for nbrs in adj.values():
        nbrs.sort()
    whites = sorted(v for v in adj if (v[0] + v[1]) % 2 == 0)
    mate = {}

    def augment(u, seen):
        for v in adj[u]:
            if v in seen:
                continue
            seen.add(v)
            if v not in mate or augment(mate[v], seen):
                mate[v] = u
                mate[u] = v
                return True
        return False

    for w in whites:
        if w not in mate:
            augment(w, set())
    return mate


def has_perfect_matching(edges):
    mate = maximum_matching(edges)
    return len(mate) == len(graph_vertices(edges))


def classify_edges(edges):
    """Partition edges into (forced, forbidden, core) sets.

    Fix one perfect matching M, direct matched edges black -> white and
    unmatched edges white -> black; alternating cycles become directed
    cycles.  An edge then lies in some perfect matching iff it is in M
    or both endpoints share a strongly connected component, and a
    matched edge is in every perfect matching iff no alternating cycle
    passes through it.  So the core is exactly the set of edges whose
    endpoints share a component.
    """
    edges = frozenset(edges)
    if not edges:
        return frozenset(), frozenset(), frozenset()
    mate = maximum_matching(edges)
    if len(mate) != len(graph_vertices(edges)):
        raise PineconeStructureError("graph has no perfect matching")
    succ = {v: [] for v in mate}
    for u, v in edges:
        white, black = (u, v) if (u[0] + u[1]) % 2 == 0 else (v, u)
        if mate[white] == black:
            succ[black].append(white)
        else:
            succ[white].append(black)
    comp = _strongly_connected_components(succ)
    forced, forbidden, core = set(), set(), set()
    for e in edges:
        u, v = e
        if comp[u] == comp[v]:
            core.add(e)
        elif mate[u] == v:
            forced.add(e)
        else:
            forbidden.add(e)
    return frozenset(forced), frozenset(forbidden), frozenset(core)


def _strongly_connected_components(succ):
    """Iterative Tarjan; returns a vertex -> component id map."""
    index = {}
    low = {}
    comp = {}
    stack = []
    on_stack = set()
    counter = [0]
    comp_id = [0]
    for root in succ:
        if root in index:
            continue
        work = [(root, 0)]
        while work:
            v, pi = work[-1]
            if pi == 0:
                index[v] = low[v] = counter[0]
                counter[0] += 1
                stack.append(v)
                on_stack.add(v)
            advanced = False
            children = succ[v]
            while pi < len(children):
                w = children[pi]
                pi += 1
                if w not in index:
                    work[-1] = (v, pi)
                    work.append((w, 0))
                    advanced = True
                    break
                if w in on_stack:
                    low[v] = min(low[v], index[w])
            if advanced:
                continue
            work.pop()
            if low[v] == index[v]:
                while True:
                    w = stack.pop()
                    on_stack.discard(w)
                    comp[w] = comp_id[0]
                    if w == v:
                        break
                comp_id[0] += 1
            if work:
                parent = work[-1][0]
                low[parent] = min(low[parent], low[v])
    return comp


def forced_edges(edges):
    """Edges contained in every perfect matching."""
    forced, _, _ = classify_edges(edges)
    return forced


def forbidden_edges(edges):
    """Edges contained in no perfect matching."""
    _, forbidden, _ = classify_edges(edges)
    return forbidden


def core_edges(edges):
    """Edges that are neither forced nor forbidden."""
    _, _, core = classify_edges(edges)
    return core


def core_cells_by_sweep(g, cells):
    """Cells of the core of the cell region, by the leading-square sweep.

    Starting from the leftmost leading square of row 0, each row outward
    keeps the faces weakly to the right of the leftmost leading square
    lying strictly right of the previous row's.  The leading squares are
    the square faces labeled 1..r, which head the horizontal strips.
    Columns grow leftward, so "right of" means a smaller column.
    """
    cells = frozenset(cells)
    rows = sorted({R for (R, _) in cells})

    def black_square_cols(row, bound):
        out = []
        for (R, C) in cells:
            if R != row or (bound is not None and C >= bound):
                continue
            face = g.face_covering_cell((R, C))
            if face.shape == "square" and face.label <= g.spec.r:
                out.append(C)
        return out

    marks = {}
    cols = black_square_cols(0, None)
    if not cols:
        return frozenset()
    marks[0] = max(cols)
    for direction in (1, -1):
        row = direction
        prev = marks[0]
        while row in rows:
            cols = black_square_cols(row, prev)
            if not cols:
                break
            marks[row] = max(cols)
            prev = marks[row]
            row += direction

    kept = set()
    for row, bound in marks.items():
        seen = {}
        for (R, C) in cells:
            if R == row and C <= bound:
                face = g.face_covering_cell((R, C))
                seen[face.cells] = face
        for face in seen.values():
            if all(cell in cells for cell in face.cells) and all(
                c <= bound for (_, c) in face.cells
            ):
                kept.update(face.cells)
    return frozenset(kept)


# ----------------------------------------------------------------------
# corner-deleted subgraphs and their cores

CORNER_DELETIONS = {
    "C": ("a", "b", "c", "d"),
    "S": ("a", "b"),
    "W": ("b", "c"),
    "N": ("c", "d"),
    "E": ("a", "d"),
}

SUB_PLACEMENT = {
    "W": (0, 0),
    "E": (0, 2),
    "C": (0, 2),
    "N": (1, 1),
    "S": (-1, 1),
}


def sub_index(spec, n, which):
    """Pinecone index of the core of the corner-deleted subgraph."""
    return {
        "A": n,
        "C": n - spec.N,
        "S": n - spec.s,
        "W": n - spec.N + spec.r,
        "N": n - spec.N + spec.s,
        "E": n - spec.r,
    }[which]


@dataclass(frozen=True)
class Subpinecone:
    """A corner-deleted subgraph of a pinecone together with its core.

    `edges` is the corner-deleted edge set in the parent's coordinates,
    `forced` the edges present in all of its perfect matchings, and
    `pinecone` the core as a canonically placed pinecone whose offset
    into the parent is `offset`.
    """

    which: str
    parent_n: int
    pinecone: Pinecone
    offset: tuple
    removed: frozenset
    edges: frozenset
    forced: frozenset

    @property
    def placed_edges(self):
        return translate_edges(self.pinecone.edges, self.offset)

    def lift_matching(self, matching):
        """Core matching (canonical coords) -> matching of the deleted graph."""
        return frozenset(translate_edge(e, self.offset) for e in matching) | self.forced

    def restrict_matching(self, matching):
        """Matching of the deleted graph -> core matching (canonical coords)."""
        back = (-self.offset[0], -self.offset[1])
        return frozenset(
            translate_edge(e, back) for e in matching if e not in self.forced
        )


def subpinecone(g, which):
    """Delete two (or four) condensation corners of g and take the core."""
    if which not in CORNER_DELETIONS:
        raise ValueError(f"unknown direction {which!r}")
    spec = g.spec
    corners = g.corners
    removed = frozenset(corners[ch] for ch in CORNER_DELETIONS[which])
    edges = frozenset(
        e for e in g.edges if e[0] not in removed and e[1] not in removed
    )
    n2 = sub_index(spec, g.n, which)
    sub = build_pinecone(spec, n2)
    offset = SUB_PLACEMENT[which]
    placed = translate_edges(sub.edges, offset)
    forced = forced_edges(edges)
    leftover = graph_vertices(edges) - graph_vertices(placed)
    matched = frozenset(v for e in forced for v in e)
    if not placed <= edges:
        raise PineconeStructureError(
            f"core of the {which}-deleted graph of G_{g.n} does not contain G_{n2}"
        )
    if matched != leftover or len(forced) * 2 != len(leftover):
        raise PineconeStructureError(
            f"forced edges of the {which}-deleted graph of G_{g.n} do not "
            f"exactly cover the complement of G_{n2}"
        )
    if forced & placed:
        raise PineconeStructureError(
            f"a forced edge of the {which}-deleted graph of G_{g.n} lies in G_{n2}"
        )
    if not sub.empty:
        for face in sub.faces:
            anchor = _translate_cell(face.anchor_cell, offset)
            if g.face_covering_cell(anchor).label != face.label:
                raise PineconeStructureError(
                    f"face labels of G_{n2} placed at {offset} disagree "
                    f"with the ambient tiling"
                )
    return Subpinecone(
        which=which,
        parent_n=g.n,
        pinecone=sub,
        offset=offset,
        removed=removed,
        edges=edges,
        forced=forced,
    )


# Forced horizontal edges on the two central-strip vertex rows of the
# corner-deleted graph: "even" keeps (row, 2t)-(row, 2t+1) for 0 < t < k,
# "odd" keeps (row, 2t-1)-(row, 2t) for 0 < t <= k.  Keys are vertex
# rows 0 and -1.
CENTRAL_FORCED_PATTERNS = {
    "C": {0: "even", -1: "even"},
    "W": {0: "even", -1: "even"},
    "E": {0: "even", -1: "even"},
    "S": {0: "even", -1: "odd"},
    "N": {0: "odd", -1: "even"},
}


def catalog_forced_edges(g, which):
    """Forced edges of the corner-deleted graph, by the explicit catalog.

    Outside the central strip: horizontal edges (i, j)-(i, j+1) with
    i > 0 and i + j even, or i < -1 and i + j odd, plus the two outer
    vertical edges of the central strip; on the central strip rows the
    pattern depends on the direction.  Only edges of the deleted graph
    that avoid the placed core are kept.

    Degenerate shapes amend the pattern near the deleted corners: when
    the central strip is a single square the N (resp. S) deletion
    forces its surviving horizontal edge on row 0 (resp. row -1), and
    when the W core is empty on a wider strip the right outer vertical
    is traded for the two horizontals next to it.
    """
    spec = g.spec
    corners = g.corners
    removed = frozenset(corners[ch] for ch in CORNER_DELETIONS[which])
    edges = frozenset(
        e for e in g.edges if e[0] not in removed and e[1] not in removed
    )
    sub = build_pinecone(spec, sub_index(spec, g.n, which))
    placed = translate_edges(sub.edges, SUB_PLACEMENT[which])
    k = g.k
    out = set()
    for e in edges:
        if e in placed:
            continue
        (r1, c1), (r2, c2) = e
        if r1 == r2:  # horizontal
            j = min(c1, c2)
            if r1 > 0 and (r1 + j) % 2 == 0:
                out.add(e)
            elif r1 < -1 and (r1 + j) % 2 == 1:
                out.add(e)
            elif r1 in (0, -1):
                pattern = CENTRAL_FORCED_PATTERNS[which][r1]
                if pattern == "even":
                    if j % 2 == 0 and 2 <= j <= 2 * k - 2:
                        out.add(e)
                else:
                    if j % 2 == 1 and 1 <= j <= 2 * k - 1:
                        out.add(e)
        else:  # vertical
            if {r1, r2} == {-1, 0} and c1 in (0, 2 * k + 1):
                out.add(e)
    if which == "N" and k == 0:
        out.add(((0, 0), (0, 1)))
    elif which == "S" and k == 0:
        out.add(((-1, 0), (-1, 1)))
    elif which == "W" and sub.empty and k >= 1:
        out.discard(((-1, 0), (0, 0)))
        out.add(((0, 0), (0, 1)))
        out.add(((-1, 0), (-1, 1)))
    return frozenset(out)


__all__ = [
    "Pinecone",
    "PineconeStructureError",
    "Subpinecone",
    "strip_width",
    "strip_left_label",
    "strip_right_label",
    "pinecone_rows",
    "build_pinecone",
    "build_pinecone_aztec",
    "central_strip_label_counts",
    "verify_borders",
    "translate_edge",
    "translate_edges",
    "graph_vertices",
    "maximum_matching",
    "has_perfect_matching",
    "classify_edges",
    "forced_edges",
    "forbidden_edges",
    "core_edges",
    "core_cells_by_sweep",
    "sub_index",
    "subpinecone",
    "catalog_forced_edges",
    "CORNER_DELETIONS",
    "SUB_PLACEMENT",
]
