"""The doubly-periodic brane tiling, queried through finite windows.

Faces of the tiling correspond to vertices of the unfolded quiver: the
vertex at lattice point (A, B) has label (1 + A*r + B*s) mod N, squares
of the lattice are oriented 4-cycles or split by one diagonal, and a
quiver vertex of degree 4 (no incident diagonals) dualizes to a square
face while degree 6 (one "up" and one "down" diagonal) dualizes to a
hexagon, drawn as a 1x2 horizontal rectangle.

Grid coordinates follow the pinecone convention throughout: cells and
vertices are addressed (row, col) with row increasing upward and col
increasing LEFTWARD, so the face one step right of cell (R, C) is at
(R, C-1).  A grid vertex (a, b) is white iff a + b is even.
"""

from __future__ import annotations

from dataclasses import dataclass

from .sequences import GRSpec


@dataclass(frozen=True)
class TilingFace:
    label: int
    shape: str  # "square" | "hexagon"
    cells: tuple  # (row, col) cells, rightmost (smallest col) first

    @property
    def anchor_cell(self):
        """The left cell: largest col for hexagons, the only cell for squares."""
        return self.cells[-1]

    @property
    def row(self):
        return self.cells[0][0]


@dataclass(frozen=True)
class OrientationCase:
    case_id: int
    diagonal: tuple | None  # (tail label, head label) for cases 1 and 3


def _norm(label, N):
    return (label - 1) % N + 1


def vertex_label(spec, A, B):
    """Label of the unfolded-quiver vertex at lattice point (A, B)."""
    return _norm(1 + A * spec.r + B * spec.s, spec.N)


def square_case(spec, i):
    """Orientation of the lattice square whose lower-left vertex is labeled i.

    The square's corners are i, i+r, i+s, i+r+s; with the representative
    of i in 1..N exactly one of the four interval cases applies.
    """
    r, s, N = spec.r, spec.s, spec.N
    if not 1 <= i <= N:
        raise ValueError(f"label {i} out of range 1..{N}")
    if i + r + s <= N:
        return OrientationCase(1, (_norm(i + r, N), _norm(i + s, N)))
    if i + s <= N:
        return OrientationCase(2, None)
    if i + r <= N:
        return OrientationCase(3, (_norm(i + r + s - N, N), _norm(i, N)))
    return OrientationCase(4, None)


def _diagonals(spec, label):
    """Directions of the up- and down-diagonal at a quiver vertex.

    Returns (up, down) with values 'L', 'R' or None: e.g. up == 'R'
    means the vertex has a diagonal toward its upper-right neighbor.
    A square face has (None, None); a hexagon one of each.
    """
    r, s, N = spec.r, spec.s, spec.N
    up = down = None
    if square_case(spec, _norm(label - r, N)).case_id == 1:
        up = "L"
    if square_case(spec, label).case_id == 3:
        if up is not None:
            raise AssertionError(f"two up-diagonals at label {label}")
        up = "R"
    if square_case(spec, _norm(label - s, N)).case_id == 1:
        down = "R"
    if square_case(spec, _norm(label - r - s, N)).case_id == 3:
        if down is not None:
            raise AssertionError(f"two down-diagonals at label {label}")
        down = "L"
    if (up is None) != (down is None):
        raise AssertionError(f"unpaired diagonal at label {label}")
    return up, down


def face_shape(spec, label):
    up, _ = _diagonals(spec, label)
    return "square" if up is None else "hexagon"


def square_labels(spec):
    """Labels whose faces are squares, derived from actual vertex degrees."""
    return frozenset(
        i for i in range(1, spec.N + 1) if face_shape(spec, i) == "square"
    )


class _Walker:
    """Lazy map from quiver lattice points to rightmost-cell columns.

    Face (A, B) occupies the cells of row B at columns X .. X+W-1 where
    W is 1 for squares and 2 for hexagons.  The face (0, 0) (always a
    square, label 1) is anchored at cell (0, 0); neighbors follow from
    the widths and the diagonal directions.
    """

    def __init__(self, spec):
        self.spec = spec
        self.x = {(0, 0): 0}
        self.row_seen = {0: 0}  # row B -> some A with known X

    def _label(self, A, B):
        return vertex_label(self.spec, A, B)

    def _width(self, A, B):
        return 1 if face_shape(self.spec, self._label(A, B)) == "square" else 2

    def _step_vertical(self, A, B, up):
        """Fill in X(A, B+1) or X(A, B-1) from X(A, B)."""
        x = self.x[(A, B)]
        w = self._width(A, B)
        ud, dd = _diagonals(self.spec, self._label(A, B))
        if up:
            t = x + (w - 1 if ud == "R" else 0)
            nb = B + 1
            w2 = self._width(A, nb)
            _, dd2 = _diagonals(self.spec, self._label(A, nb))
            self.x[(A, nb)] = t - (w2 - 1 if dd2 == "R" else 0)
        else:
            u = x + (w - 1 if dd == "R" else 0)
            nb = B - 1
            w2 = self._width(A, nb)
            ud2, _ = _diagonals(self.spec, self._label(A, nb))
            self.x[(A, nb)] = u - (w2 - 1 if ud2 == "R" else 0)
        self.row_seen[nb] = A

    def _reach_row(self, B):
        if B in self.row_seen:
            return
        known = sorted(self.row_seen)
        src = min(known, key=lambda b: abs(b - B))
        A = self.row_seen[src]
        step = 1 if B > src else -1
        for b in range(src, B, step):
            if (A, b + step) not in self.x:
                self._step_vertical(A, b, step == 1)

    def col_of(self, A, B):
        if (A, B) in self.x:
            return self.x[(A, B)]
        self._reach_row(B)
        # walk horizontally from the nearest known face in this row
        known = [a for (a, b) in self.x if b == B]
        a0 = min(known, key=lambda a: abs(a - A))
        while a0 < A:
            # face to the right starts W(A+1) columns further right
            self.x[(a0 + 1, B)] = self.x[(a0, B)] - self._width(a0 + 1, B)
            a0 += 1
        while a0 > A:
            self.x[(a0 - 1, B)] = self.x[(a0, B)] + self._width(a0, B)
            a0 -= 1
        return self.x[(A, B)]

    def face_at(self, cell):
        R, C = cell
        self._reach_row(R)
        A = self.row_seen[R]
        x = self.col_of(A, R)
        while True:
            w = self._width(A, R)
            if x <= C <= x + w - 1:
                break
            if C < x:
                A += 1
            else:
                A -= 1
            x = self.col_of(A, R)
        label = self._label(A, R)
        shape = "square" if w == 1 else "hexagon"
        cells = tuple((R, x + j) for j in range(w))
        return TilingFace(label=label, shape=shape, cells=cells), (A, R)


_walkers = {}


def _walker(spec):
    if spec not in _walkers:
        _walkers[spec] = _Walker(spec)
    return _walkers[spec]


def face_at(spec, cell):
    """The tiling face covering the given (row, col) cell."""
    face, _ = _walker(spec).face_at(cell)
    return face


def face_of_lattice(spec, A, B):
    """The tiling face dual to the quiver lattice point (A, B)."""
    w = _walker(spec)
    x = w.col_of(A, B)
    width = w._width(A, B)
    return TilingFace(
        label=vertex_label(spec, A, B),
        shape="square" if width == 1 else "hexagon",
        cells=tuple((B, x + j) for j in range(width)),
    )


def face_at_with_lattice(spec, cell):
    """Like face_at but also returns the quiver lattice point (A, B)."""
    return _walker(spec).face_at(cell)


def faces_in_window(spec, row_range, col_range):
    """All distinct faces intersecting the cell window (ranges inclusive)."""
    r0, r1 = row_range
    c0, c1 = col_range
    seen = {}
    for row in range(r0, r1 + 1):
        for col in range(c0, c1 + 1):
            face = face_at(spec, (row, col))
            seen[face.cells] = face
    return list(seen.values())


def tiling_edges_for_cells(spec, cells):
    """Grid edges of the tiling bounding the given set of cells.

    All horizontal unit segments on cell boundaries are tiling edges;
    a vertical segment is one unless it is interior to a hexagon.
    """
    cells = set(cells)
    edges = set()
    for (R, C) in cells:
        edges.add(((R, C), (R, C + 1)))
        edges.add(((R - 1, C), (R - 1, C + 1)))
        for side in (C, C + 1):
            left_cell = (R, side)
            right_cell = (R, side - 1)
            inner = left_cell in _face_cellset(spec, right_cell)
            if not inner:
                edges.add(((R - 1, side), (R, side)))
    return edges


def _face_cellset(spec, cell):
    return set(face_at(spec, cell).cells)


def face_neighbor_labels(spec, face):
    """Labels across each boundary edge of a face (with multiplicity).

    Folding the tiling back up must reproduce the Gale-Robinson quiver's
    neighborhoods, so this is the basis of the fold-back property test.
    """
    labels = []
    cols = [c for _, c in face.cells]
    lo, hi = min(cols), max(cols)
    R = face.row
    for (_, C) in face.cells:
        labels.append(face_at(spec, (R + 1, C)).label)
        labels.append(face_at(spec, (R - 1, C)).label)
    labels.append(face_at(spec, (R, lo - 1)).label)  # across right side
    labels.append(face_at(spec, (R, hi + 1)).label)  # across left side
    return sorted(labels)


def vertex_is_white(vertex):
    a, b = vertex
    return (a + b) % 2 == 0


__all__ = [
    "TilingFace",
    "OrientationCase",
    "vertex_label",
    "square_case",
    "face_shape",
    "square_labels",
    "face_at",
    "face_at_with_lattice",
    "face_of_lattice",
    "faces_in_window",
    "tiling_edges_for_cells",
    "face_neighbor_labels",
    "vertex_is_white",
]
