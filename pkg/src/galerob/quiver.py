"""Quivers with principal coefficients: mutation, periodicity, c-vectors.

A quiver on N mutable vertices is stored as the skew-symmetric matrix
b[i][j] = (#arrows i->j) - (#arrows j->i).  The principal framing adds
one frozen vertex per mutable vertex; the frozen arrows are kept in a
second matrix c with c[j][i] = #arrows (frozen j) -> (mutable i), counted
with sign.  Frozen vertices are never mutated, and arrows between frozen
vertices are never created by mutation at a mutable vertex, so the pair
(b, c) is a complete description.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from .laurent import LaurentPolynomial
from .sequences import GRSpec, d, validate_parameters


class MutationError(ValueError):
    """Mutation requested at a frozen or out-of-range vertex."""


@dataclass(frozen=True)
class Quiver:
    b: tuple  # N x N skew-symmetric, 0-based internally
    c: tuple  # N x N, row j = arrows from frozen vertex j+1

    @property
    def n(self):
        return len(self.b)

    def arrow(self, i, j):
        """Signed arrow count i -> j between mutable vertices (1-based)."""
        return self.b[i - 1][j - 1]

    def c_vector(self, i):
        """The c-vector of mutable vertex i (1-based)."""
        return tuple(self.c[j][i - 1] for j in range(self.n))

    def to_json_obj(self):
        return {
            "schema": 1,
            "n": self.n,
            "b": [list(row) for row in self.b],
            "c": [list(row) for row in self.c],
        }


def framed_quiver(b_rows):
    """Attach the principal framing (identity frozen matrix) to b."""
    n = len(b_rows)
    b = tuple(tuple(row) for row in b_rows)
    c = tuple(tuple(1 if i == j else 0 for i in range(n)) for j in range(n))
    return Quiver(b=b, c=c)


def gale_robinson_arrows(r, s, N, keep_two_cycles=False):
    """Arrow multiset of the Gale-Robinson quiver as a Counter (i, j) -> count.

    Built by the three drawing steps; with keep_two_cycles=False opposite
    pairs are cancelled (the fourth step).  The uncancelled multiset is
    what the brane tiling unfolds, hence the flag.
    """
    validate_parameters(r, s, N)
    arrows = Counter()
    for i in range(1, N - r + 1):
        arrows[(i, i + r)] += 1
    for j in range(1, r + 1):
        arrows[(j, N - r + j)] += 1
    for i in range(1, N - s + 1):
        arrows[(s + i, i)] += 1
    for j in range(1, s + 1):
        arrows[(N - s + j, j)] += 1
    for i in range(1, N - r - s + 1):
        arrows[(r + i, s + i)] += 1
    for j in range(1, s - r + 1):
        arrows[(r + j, N - s + j)] += 1
    if keep_two_cycles:
        return arrows
    cancelled = Counter()
    for i, j in {tuple(sorted(pair)) for pair in arrows}:
        net = arrows.get((i, j), 0) - arrows.get((j, i), 0)
        if net > 0:
            cancelled[(i, j)] = net
        elif net < 0:
            cancelled[(j, i)] = -net
    return cancelled


def build_gale_robinson(r, s, N, keep_two_cycles=False):
    """The framed Gale-Robinson quiver for parameters (r, s, N)."""
    arrows = gale_robinson_arrows(r, s, N, keep_two_cycles)
    b = [[0] * N for _ in range(N)]
    for (i, j), count in arrows.items():
        b[i - 1][j - 1] += count
        b[j - 1][i - 1] -= count
    return framed_quiver(b)


def mutate(q, k):
    """Quiver mutation at mutable vertex k (1-based).  Involutive."""
    n = q.n
    if not 1 <= k <= n:
        raise MutationError(f"vertex {k} is not mutable (1..{n})")
    kk = k - 1
    b, c = q.b, q.c
    new_b = [
        [
            -b[i][j]
            if kk in (i, j)
            else b[i][j] + (abs(b[i][kk]) * b[kk][j] + b[i][kk] * abs(b[kk][j])) // 2
            for j in range(n)
        ]
        for i in range(n)
    ]
    new_c = [
        [
            -c[j][i]
            if i == kk
            else c[j][i] + (abs(c[j][kk]) * b[kk][i] + c[j][kk] * abs(b[kk][i])) // 2
            for i in range(n)
        ]
        for j in range(n)
    ]
    return Quiver(
        b=tuple(tuple(row) for row in new_b), c=tuple(tuple(row) for row in new_c)
    )


def relabel(q, perm):
    """Relabel vertices: arrow i->j becomes perm(i)->perm(j) (1-based map)."""
    n = q.n
    new_b = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            new_b[perm[i + 1] - 1][perm[j + 1] - 1] = q.b[i][j]
    new_c = [[0] * n for _ in range(n)]
    for j in range(n):
        for i in range(n):
            new_c[perm[j + 1] - 1][perm[i + 1] - 1] = q.c[j][i]
    return Quiver(
        b=tuple(tuple(row) for row in new_b), c=tuple(tuple(row) for row in new_c)
    )


def rho(N):
    """Cyclic relabeling k -> k+1 (mod N); its inverse sends 2 -> 1, etc."""
    return {k: k % N + 1 for k in range(1, N + 1)}


def is_periodic(q, m):
    """True iff mutating at 1..m then relabeling by rho^m restores q.

    Only the mutable arrow matrix is compared.
    """
    n = q.n
    if not 1 <= m <= n:
        raise MutationError(f"period {m} out of range 1..{n}")
    mutated = q
    for k in range(1, m + 1):
        mutated = mutate(mutated, k)
    perm = rho(n)
    relabeled = q
    for _ in range(m):
        relabeled = relabel(relabeled, perm)
    return mutated.b == relabeled.b


@dataclass(frozen=True)
class Seed:
    quiver: Quiver
    cluster: tuple  # N LaurentPolynomials


def initial_seed(r, s, N):
    q = build_gale_robinson(r, s, N)
    cluster = tuple(LaurentPolynomial.x_var(N, i) for i in range(1, N + 1))
    return Seed(quiver=q, cluster=cluster)


def seed_mutate(seed, k):
    """Seed mutation: exchange relation at vertex k, quiver in lockstep.

    The frozen variables join the exchange binomial: a frozen arrow
    y_j -> x_k puts y_j in the incoming product, a reversed one puts it
    in the outgoing product.
    """
    q = seed.quiver
    n = q.n
    if not 1 <= k <= n:
        raise MutationError(f"vertex {k} is not mutable (1..{n})")
    kk = k - 1
    incoming = LaurentPolynomial.one(n)
    outgoing = LaurentPolynomial.one(n)
    for i in range(n):
        mult = q.b[i][kk]
        if mult > 0:
            for _ in range(mult):
                incoming = incoming * seed.cluster[i]
        elif mult < 0:
            for _ in range(-mult):
                outgoing = outgoing * seed.cluster[i]
    for j in range(n):
        mult = q.c[j][kk]
        if mult > 0:
            incoming = incoming * LaurentPolynomial.y_var(n, j + 1, mult)
        elif mult < 0:
            outgoing = outgoing * LaurentPolynomial.y_var(n, j + 1, -mult)
    new_var = (incoming + outgoing).div_exact(seed.cluster[kk])
    cluster = list(seed.cluster)
    cluster[kk] = new_var
    return Seed(quiver=mutate(q, k), cluster=tuple(cluster))


def principal_cluster_variables(spec, n_max):
    """Cluster variables x_1..x_{n_max} by periodic seed mutation.

    Mutation order is 1, 2, ..., N, 1, 2, ...; step l produces the
    variable indexed N + l.
    """
    N = spec.N
    seed = initial_seed(spec.r, spec.s, spec.N)
    out = list(seed.cluster)
    for step in range(1, max(0, n_max - N) + 1):
        k = (step - 1) % N + 1
        seed = seed_mutate(seed, k)
        out.append(seed.cluster[k - 1])
    return out[:n_max]


def cluster_variable(r, s, N, n):
    """The cluster variable with principal coefficients indexed by n."""
    if n < 1:
        raise ValueError("n must be positive")
    spec = GRSpec(r, s, N)
    return principal_cluster_variables(spec, n)[n - 1]


# ----------------------------------------------------------------------
# c-vectors


def is_sign_coherent(vec):
    return all(v >= 0 for v in vec) or all(v <= 0 for v in vec)


def c_vector_direct(r, s, N, i, ell):
    """c-vector of vertex i after ell periodic mutations (no polynomials)."""
    if not 1 <= i <= N:
        raise ValueError(f"vertex {i} out of range 1..{N}")
    if ell < 0:
        raise ValueError("ell must be nonnegative")
    q = build_gale_robinson(r, s, N)
    for step in range(1, ell + 1):
        q = mutate(q, (step - 1) % N + 1)
    return q.c_vector(i)


def e_vector(r, N, i_bar):
    """E vector: j-th entry d(i_bar - j, r, N - r)."""
    return tuple(d(i_bar - j, r, N - r) for j in range(1, N + 1))


def f_vector(r, N, i_bar):
    """F vector: indicator of j = i_bar + N mod (N - r)."""
    return tuple(
        1 if (j - (i_bar + N)) % (N - r) == 0 else 0 for j in range(1, N + 1)
    )


def c_vector_closed_form(r, s, N, i, ell):
    """Closed-form c-vector; falls back to direct mutation for ell < r.

    With i_bar = floor((ell + r - i)/N)*N + i the vector is -E(i_bar)
    when ell+1-r <= i_bar <= ell, +E(i_bar) when ell+1 <= i_bar <= ell+r,
    and F(i_bar) otherwise.
    """
    validate_parameters(r, s, N)
    if not 1 <= i <= N:
        raise ValueError(f"vertex {i} out of range 1..{N}")
    if ell < r:
        return c_vector_direct(r, s, N, i, ell)
    i_bar = ((ell + r - i) // N) * N + i
    if ell + 1 - r <= i_bar <= ell:
        return tuple(-v for v in e_vector(r, N, i_bar))
    if ell + 1 <= i_bar <= ell + r:
        return e_vector(r, N, i_bar)
    return f_vector(r, N, i_bar)


__all__ = [
    "Quiver",
    "Seed",
    "MutationError",
    "framed_quiver",
    "gale_robinson_arrows",
    "build_gale_robinson",
    "mutate",
    "relabel",
    "rho",
    "is_periodic",
    "initial_seed",
    "seed_mutate",
    "principal_cluster_variables",
    "cluster_variable",
    "is_sign_coherent",
    "c_vector_direct",
    "c_vector_closed_form",
    "e_vector",
    "f_vector",
]
