"""Command-line interface.

Commands: sequence, cluster-var, tiling, pinecone, matchings, render,
verify.  Exit codes: 0 success, 1 verification failure, 2 usage or
parameter error.  JSON outputs carry a "schema": 1 field.  Figures
produced by the verify and render commands land in --out-dir, the
GALEROB_OUTPUT_DIR environment variable, or the working directory.
"""

from __future__ import annotations

import argparse
import json
import os
import random
import sys

from .laurent import LaurentPolynomial
from .sequences import (
    GRSpec,
    gr_recurrence_principal,
    gr_sequence_plain,
)
from .quiver import (
    c_vector_closed_form,
    c_vector_direct,
    e_vector,
    f_vector,
    is_periodic,
    is_sign_coherent,
    build_gale_robinson,
    principal_cluster_variables,
)
from .tiling import faces_in_window
from .pinecone import (
    build_pinecone,
    build_pinecone_aztec,
    verify_borders as check_border_identities,
)
from .matching import (
    covering_monomial,
    descend_to_minimal,
    enumerate_matchings,
    graph_weight,
    height_profile,
    matching_count_permanent,
    minimal_matching,
    twist,
    twistable_faces,
    x_of_matching,
    y_of_matching,
)
from . import kuo


class UsageError(Exception):
    pass


def _parse_spec(text):
    try:
        r, s, N = (int(p) for p in text.split(","))
        return GRSpec(r, s, N)
    except ValueError as exc:
        raise UsageError(f"invalid spec {text!r}: {exc}") from exc


def _parse_range(text):
    try:
        a, b = (int(p) for p in text.split(":"))
        return a, b
    except ValueError as exc:
        raise UsageError(f"invalid range {text!r}, expected a:b") from exc


def _out_dir(args):
    path = getattr(args, "out_dir", None) or os.environ.get("GALEROB_OUTPUT_DIR")
    if path:
        os.makedirs(path, exist_ok=True)
    return path


def _poly_obj(poly):
    obj = poly.to_json_obj()
    obj["schema"] = 1
    return obj


def _edges_obj(edges):
    return [[list(u), list(v)] for u, v in sorted(edges)]


# ----------------------------------------------------------------------
# commands

def cmd_sequence(args):
    spec = _parse_spec(args.spec)
    if args.ones:
        seq = gr_sequence_plain(spec, args.n_max)
        print(",".join(str(v) for v in seq))
    else:
        for poly in gr_recurrence_principal(spec, args.n_max):
            print(json.dumps(_poly_obj(poly)))
    return 0


def cmd_cluster_var(args):
    spec = _parse_spec(args.spec)
    if args.n < 1:
        raise UsageError("--n must be positive")
    polys = gr_recurrence_principal(spec, max(args.n, spec.N))
    print(json.dumps(_poly_obj(polys[args.n - 1])))
    return 0


def cmd_tiling(args):
    spec = _parse_spec(args.spec)
    faces = faces_in_window(spec, _parse_range(args.rows), _parse_range(args.cols))
    obj = {
        "schema": 1,
        "spec": str(spec),
        "faces": [
            {"label": f.label, "shape": f.shape, "cells": [list(c) for c in f.cells]}
            for f in sorted(faces, key=lambda f: f.cells)
        ],
    }
    print(json.dumps(obj))
    return 0


def cmd_pinecone(args):
    spec = _parse_spec(args.spec)
    g = build_pinecone(spec, args.n)
    obj = {
        "schema": 1,
        "spec": str(spec),
        "n": args.n,
        "vertices": [list(v) for v in sorted(g.vertices)],
        "edges": _edges_obj(g.edges),
        "faces": [
            {"label": f.label, "shape": f.shape, "cells": [list(c) for c in f.cells]}
            for f in g.faces
        ],
    }
    print(json.dumps(obj))
    return 0


def cmd_matchings(args):
    spec = _parse_spec(args.spec)
    g = build_pinecone(spec, args.n)
    if args.count:
        print(len(enumerate_matchings(g.edges)))
        return 0
    matchings = enumerate_matchings(g.edges)
    for m in matchings:
        obj = {"schema": 1, "edges": _edges_obj(m)}
        if args.weights:
            obj["x"] = _poly_obj(x_of_matching(g, m))
            obj["y"] = _poly_obj(y_of_matching(g, m))
        print(json.dumps(obj))
    return 0


def cmd_render(args):
    from .render import render_pinecone, render_tiling

    spec = _parse_spec(args.spec)
    out_dir = _out_dir(args) or "."
    if args.what == "tiling":
        rows = _parse_range(args.rows)
        cols = _parse_range(args.cols)
        path = args.out or os.path.join(
            out_dir, f"tiling-{spec.r}-{spec.s}-{spec.N}.svg"
        )
        render_tiling(spec, rows, cols, path)
    else:
        g = build_pinecone(spec, args.n)
        if g.empty:
            raise UsageError(f"pinecone G_{args.n} is empty, nothing to draw")
        path = args.out or os.path.join(
            out_dir, f"pinecone-{spec.r}-{spec.s}-{spec.N}-n{args.n}.svg"
        )
        highlight = minimal_matching(g) if args.highlight_minimal else None
        render_pinecone(g, path, highlight)
    print(path)
    return 0


# ----------------------------------------------------------------------
# verification reports

def _report(ok, label):
    print(("PASS" if ok else "FAIL") + " " + label)
    return ok


def _render_report_figure(args, g, name):
    out_dir = _out_dir(args)
    if not out_dir or g.empty:
        return
    from .render import render_pinecone

    render_pinecone(g, os.path.join(out_dir, name), minimal_matching(g))


def verify_theorem(args):
    spec = _parse_spec(args.spec)
    n_max = args.n_max or max(spec.N + 9, 16 if spec.N == 7 else 0)
    rec = gr_recurrence_principal(spec, n_max)
    mut = principal_cluster_variables(spec, n_max)
    all_ok = True
    for n in range(1, n_max + 1):
        g = build_pinecone(spec, n)
        w = graph_weight(g)
        ok = w == rec[n - 1] == mut[n - 1]
        all_ok &= _report(ok, f"theorem spec={spec} n={n} terms={len(w.terms)}")
        if not ok:
            diff = set(w.terms.items()) ^ set(rec[n - 1].terms.items())
            print(f"  first differing term: {sorted(diff)[0]}")
        _render_report_figure(args, g, f"theorem-{spec.r}-{spec.s}-{spec.N}-n{n}.svg")
    return 0 if all_ok else 1


def verify_kuo(args):
    spec = _parse_spec(args.spec)
    g = build_pinecone(spec, args.n)
    subs = kuo._subpinecones(g)
    all_ok = True
    for conv in (1, 2):
        try:
            counts = kuo.verify_bijection(g, conv)
            ok = True
            label = f"kuo bijection spec={spec} n={args.n} convention={conv} {counts}"
        except kuo.CondensationError as exc:
            ok = False
            label = f"kuo bijection spec={spec} n={args.n} convention={conv}: {exc}"
        all_ok &= _report(ok, label)
    all_ok &= _report(kuo.verify_cardinality(g), f"kuo cardinality spec={spec} n={args.n}")
    mc_list = enumerate_matchings(subs["C"].pinecone.edges)
    pair_fail = None
    for m_a in enumerate_matchings(g.edges):
        for m_c in mc_list:
            for conv in (1, 2):
                try:
                    kuo.verify_height_identity(g, m_a, m_c, conv, subs)
                    kuo.verify_weight_identity(g, m_a, m_c, conv, subs)
                except kuo.CondensationError as exc:
                    pair_fail = (m_a, m_c, conv, exc)
                    break
    ok = pair_fail is None
    all_ok &= _report(ok, f"kuo height+weight identities spec={spec} n={args.n}")
    if not ok:
        m_a, m_c, conv, exc = pair_fail
        print(f"  convention={conv}: {exc}")
        print(f"  m_a={json.dumps(_edges_obj(m_a))}")
        print(f"  m_c={json.dumps(_edges_obj(m_c))}")
    all_ok &= _report(
        kuo.verify_weight_recurrence(spec, args.n),
        f"kuo weight recurrence spec={spec} n={args.n}",
    )
    _render_report_figure(args, g, f"kuo-{spec.r}-{spec.s}-{spec.N}-n{args.n}.svg")
    return 0 if all_ok else 1


def verify_heights(args):
    spec = _parse_spec(args.spec)
    g = build_pinecone(spec, args.n)
    matchings = enumerate_matchings(g.edges)
    mmin = minimal_matching(g)
    rng = random.Random(args.seed)
    all_ok = True
    all_ok &= _report(
        y_of_matching(g, mmin) == LaurentPolynomial.one(spec.N),
        f"heights minimal-has-trivial-height spec={spec} n={args.n}",
    )
    ok = all(
        descend_to_minimal(g, matchings[rng.randrange(len(matchings))]) == mmin
        for _ in range(3)
    )
    all_ok &= _report(ok, f"heights descent-reaches-minimal spec={spec} n={args.n}")
    checked = 0
    ok = True
    for _ in range(100):
        m = matchings[rng.randrange(len(matchings))]
        faces = twistable_faces(g, m)
        if not faces:
            continue
        face = faces[rng.randrange(len(faces))]
        other = twist(g, m, face)
        before, after = height_profile(g, m), height_profile(g, other)
        delta = {c: after[c] - before[c] for c in before}
        nonzero = {c: v for c, v in delta.items() if v}
        ok &= set(nonzero) == {face.cells} and abs(nonzero[face.cells]) == 1
        ok &= twist(g, other, face) == m
        checked += 1
    all_ok &= _report(ok, f"heights twist-cover-relation spec={spec} n={args.n} sampled={checked}")
    _render_report_figure(args, g, f"heights-{spec.r}-{spec.s}-{spec.N}-n{args.n}.svg")
    return 0 if all_ok else 1


def verify_borders(args):
    spec = _parse_spec(args.spec)
    n_max = args.n_max or spec.N + 9
    all_ok = True
    for n in range(spec.N + 1, n_max + 1):
        strips = build_pinecone(spec, n)
        aztec = build_pinecone_aztec(spec, n)
        all_ok &= _report(
            strips.cells == aztec.cells,
            f"borders strips-vs-aztec spec={spec} n={n}",
        )
        try:
            check_border_identities(spec, n)
            ok = True
        except Exception as exc:
            ok = False
            print(f"  {exc}")
        all_ok &= _report(ok, f"borders intersections spec={spec} n={n}")
        _render_report_figure(args, strips, f"borders-{spec.r}-{spec.s}-{spec.N}-n{n}.svg")
    return 0 if all_ok else 1


def verify_cvectors(args):
    spec = _parse_spec(args.spec)
    r, s, N = spec.r, spec.s, spec.N
    ell_max = args.ell_max or 3 * N
    all_ok = True
    ok = all(
        c_vector_closed_form(r, s, N, i, ell) == c_vector_direct(r, s, N, i, ell)
        for i in range(1, N + 1)
        for ell in range(ell_max + 1)
    )
    all_ok &= _report(ok, f"cvectors closed-vs-direct spec={spec} ell<={ell_max}")
    ok = all(
        is_sign_coherent(c_vector_direct(r, s, N, i, ell))
        for i in range(1, N + 1)
        for ell in range(ell_max + 1)
    )
    all_ok &= _report(ok, f"cvectors sign-coherence spec={spec} ell<={ell_max}")
    ok = all(
        f_vector(r, N, i_bar)
        == tuple(
            a - b
            for a, b in zip(e_vector(r, N, i_bar + N), e_vector(r, N, i_bar + N - r))
        )
        for i_bar in range(1, 3 * N + 1)
    )
    all_ok &= _report(ok, f"cvectors F-from-E identity spec={spec}")
    all_ok &= _report(
        is_periodic(build_gale_robinson(r, s, N), 1),
        f"cvectors quiver-period-1 spec={spec}",
    )
    return 0 if all_ok else 1


# ----------------------------------------------------------------------
# argument parsing

def build_parser():
    parser = argparse.ArgumentParser(
        prog="galerob",
        description="Exact Gale-Robinson cluster variables three ways.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("sequence", help="terms of the recurrence")
    p.add_argument("--spec", required=True)
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--ones", action="store_true", help="plain integer sequence")
    p.set_defaults(func=cmd_sequence)

    p = sub.add_parser("cluster-var", help="one cluster variable as JSON")
    p.add_argument("--spec", required=True)
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_cluster_var)

    p = sub.add_parser("tiling", help="faces of a tiling window as JSON")
    p.add_argument("--spec", required=True)
    p.add_argument("--rows", required=True, metavar="a:b")
    p.add_argument("--cols", required=True, metavar="c:d")
    p.set_defaults(func=cmd_tiling)

    p = sub.add_parser("pinecone", help="pinecone graph dump as JSON")
    p.add_argument("--spec", required=True)
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_pinecone)

    p = sub.add_parser("matchings", help="perfect matchings of a pinecone")
    p.add_argument("--spec", required=True)
    p.add_argument("--n", type=int, required=True)
    mode = p.add_mutually_exclusive_group(required=True)
    mode.add_argument("--count", action="store_true")
    mode.add_argument("--list", action="store_true")
    mode.add_argument("--weights", action="store_true")
    p.set_defaults(func=cmd_matchings)

    p = sub.add_parser("render", help="render a tiling window or pinecone to SVG")
    p.add_argument("what", choices=["tiling", "pinecone"])
    p.add_argument("--spec", required=True)
    p.add_argument("--n", type=int)
    p.add_argument("--rows", metavar="a:b")
    p.add_argument("--cols", metavar="c:d")
    p.add_argument("--highlight-minimal", action="store_true")
    p.add_argument("--out")
    p.add_argument("--out-dir")
    p.set_defaults(func=cmd_render)

    p = sub.add_parser("verify", help="verification reports")
    vsub = p.add_subparsers(dest="check", required=True)

    v = vsub.add_parser("theorem", help="three-way equality of the engines")
    v.add_argument("--spec", required=True)
    v.add_argument("--n-max", type=int)
    v.add_argument("--out-dir")
    v.set_defaults(func=verify_theorem)

    v = vsub.add_parser("kuo", help="condensation bijection and identities")
    v.add_argument("--spec", required=True)
    v.add_argument("--n", type=int, required=True)
    v.add_argument("--out-dir")
    v.set_defaults(func=verify_kuo)

    v = vsub.add_parser("heights", help="twist lattice and height functions")
    v.add_argument("--spec", required=True)
    v.add_argument("--n", type=int, required=True)
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--out-dir")
    v.set_defaults(func=verify_heights)

    v = vsub.add_parser("borders", help="pinecone construction identities")
    v.add_argument("--spec", required=True)
    v.add_argument("--n-max", type=int)
    v.add_argument("--out-dir")
    v.set_defaults(func=verify_borders)

    v = vsub.add_parser("cvectors", help="c-vector closed form and coherence")
    v.add_argument("--spec", required=True)
    v.add_argument("--ell-max", type=int)
    v.set_defaults(func=verify_cvectors)

    return parser


def _join_range_flags(argv):
    """Fold `--rows -2:2` into `--rows=-2:2` so argparse accepts it."""
    out = []
    it = iter(argv)
    for token in it:
        if token in ("--rows", "--cols"):
            value = next(it, None)
            if value is None:
                out.append(token)
            else:
                out.append(f"{token}={value}")
        else:
            out.append(token)
    return out


def main(argv=None):
    parser = build_parser()
    if argv is None:
        argv = sys.argv[1:]
    argv = _join_range_flags(list(argv))
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    if args.command == "render":
        if args.what == "tiling" and not (args.rows and args.cols):
            print("render tiling requires --rows and --cols", file=sys.stderr)
            return 2
        if args.what == "pinecone" and args.n is None:
            print("render pinecone requires --n", file=sys.stderr)
            return 2
    try:
        return args.func(args)
    except UsageError as exc:
        print(str(exc), file=sys.stderr)
        return 2
    except (ValueError, ArithmeticError) as exc:
        print(str(exc), file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
