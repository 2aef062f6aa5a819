"""Deterministic SVG drawings of tiling windows and pinecones.

Grid coordinates have col increasing leftward, so the picture uses
x = -col, y = row.  All output is byte-reproducible: the SVG hash salt
is pinned and the date metadata stripped.
"""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
from matplotlib.lines import Line2D

from .tiling import faces_in_window, tiling_edges_for_cells, vertex_is_white

_SALT = "galerob"


def _vertex_xy(v):
    row, col = v
    return -col, row


def _cell_center(cell):
    row, col = cell
    return -col - 0.5, row - 0.5


def _face_center(face):
    pts = [_cell_center(cell) for cell in face.cells]
    return (
        sum(x for x, _ in pts) / len(pts),
        sum(y for _, y in pts) / len(pts),
    )


def _draw_graph(ax, edges, faces, highlight=frozenset()):
    highlight = {tuple(sorted(e)) for e in highlight}
    for e in sorted(edges):
        (x1, y1), (x2, y2) = _vertex_xy(e[0]), _vertex_xy(e[1])
        if tuple(sorted(e)) in highlight:
            ax.add_line(Line2D([x1, x2], [y1, y2], color="#c02020", linewidth=2.6, zorder=2))
        else:
            ax.add_line(Line2D([x1, x2], [y1, y2], color="#303030", linewidth=1.0, zorder=1))
    vertices = sorted({v for e in edges for v in e})
    for v in vertices:
        x, y = _vertex_xy(v)
        if vertex_is_white(v):
            ax.plot([x], [y], marker="o", markersize=5, markerfacecolor="white",
                    markeredgecolor="black", zorder=3)
        else:
            ax.plot([x], [y], marker="o", markersize=5, color="black", zorder=3)
    for face in sorted(faces, key=lambda f: f.cells):
        x, y = _face_center(face)
        ax.text(x, y, str(face.label), ha="center", va="center",
                fontsize=9, color="#1040a0", zorder=4)


def _finish(fig, ax, path):
    ax.set_aspect("equal")
    ax.axis("off")
    with plt.rc_context({"svg.hashsalt": _SALT}):
        fig.savefig(path, format="svg", bbox_inches="tight",
                    metadata={"Date": None})
    plt.close(fig)


def render_tiling(spec, row_range, col_range, path):
    """Render a rectangular window of the brane tiling to an SVG file."""
    faces = faces_in_window(spec, row_range, col_range)
    cells = {cell for face in faces for cell in face.cells}
    edges = tiling_edges_for_cells(spec, cells)
    fig, ax = plt.subplots(figsize=(
        max(3, (col_range[1] - col_range[0] + 3) * 0.6),
        max(3, (row_range[1] - row_range[0] + 3) * 0.6),
    ))
    _draw_graph(ax, edges, faces)
    _finish(fig, ax, path)
    return path


def render_pinecone(g, path, highlight=None):
    """Render a pinecone, optionally highlighting a matching."""
    fig, ax = plt.subplots(figsize=(
        max(3, (2 * g.k + 4) * 0.6),
        max(3, (2 * len(set(c[0] for c in g.cells)) + 4) * 0.45),
    ))
    _draw_graph(ax, g.edges, g.faces, highlight or frozenset())
    _finish(fig, ax, path)
    return path


__all__ = ["render_tiling", "render_pinecone"]
