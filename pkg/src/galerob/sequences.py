"""Gale-Robinson recurrences and the restricted partition function.

The recurrence x_n * x_{n-N} = x_{n-r} * x_{n-N+r} + x_{n-s} * x_{n-N+s}
is evaluated here both over the integers and, with principal
coefficients, over Laurent polynomials.  The coefficient exponents are
values of the two-part restricted partition function d(m, a, b).  This
module is deliberately independent of the quiver-mutation engine so the
two can serve as mutual oracles.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .laurent import ExactDivisionError, LaurentPolynomial


class ParameterOrderError(ValueError):
    """(r, s, N) violates 1 <= r <= s <= N/2 (r = s only at s = N/2)."""


class CommonFactorError(ValueError):
    """gcd(r, s, N) > 1, so the three-term recurrence degenerates."""


class IntegralityError(ArithmeticError):
    """A recurrence division came out non-exact."""


def validate_parameters(r, s, N):
    if math.gcd(r, s, N) != 1:
        raise CommonFactorError(
            f"gcd(r, s, N) = {math.gcd(r, s, N)} must be 1 "
            f"for (r, s, N) = ({r}, {s}, {N})"
        )
    if not (1 <= r <= s <= N / 2):
        raise ParameterOrderError(
            f"need 1 <= r <= s <= N/2, got (r, s, N) = ({r}, {s}, {N})"
        )
    if r == s and 2 * s != N:
        raise ParameterOrderError(
            f"r = s is only allowed when s = N/2, got ({r}, {s}, {N})"
        )


@dataclass(frozen=True)
class GRSpec:
    """Validated parameter triple (r, s, N) of a Gale-Robinson recurrence."""

    r: int
    s: int
    N: int

    def __post_init__(self):
        validate_parameters(self.r, self.s, self.N)

    def __str__(self):
        return f"{self.r},{self.s},{self.N}"


def d(m, a, b):
    """Number of ways to write m as A*a + B*b with A, B >= 0 integers.

    Returns 0 for negative m.  Computed by exhaustive enumeration; the
    arguments stay tiny in every use here.
    """
    if a <= 0 or b <= 0:
        raise ValueError(f"parts must be positive, got a={a}, b={b}")
    if m < 0:
        return 0
    return sum(1 for A in range(m // a + 1) if (m - A * a) % b == 0)


def d_popoviciu(m, a, b):
    """Closed form for d(m, a, b) when gcd(a, b) = 1.

    d(m,a,b) = m/(ab) - {b^{-1} m / a} - {a^{-1} m / b} + 1, where the
    inverses are taken mod a and mod b respectively and {.} is the
    fractional part.  Cross-check only; d() is the primary path.
    """
    if math.gcd(a, b) != 1:
        raise ValueError(f"gcd(a, b) must be 1, got ({a}, {b})")
    if m < 0:
        raise ValueError("m must be nonnegative")
    b_inv = pow(b, -1, a) if a > 1 else 0
    a_inv = pow(a, -1, b) if b > 1 else 0
    value = (
        Fraction(m, a * b)
        - Fraction(b_inv * m % a, a)
        - Fraction(a_inv * m % b, b)
        + 1
    )
    if value.denominator != 1:
        raise ArithmeticError(f"closed form produced non-integer {value}")
    return int(value)


def principal_y_exponents(spec, n):
    """Exponent of each y_i in the second term of the exchange at step n."""
    return [d(n - spec.N - i, spec.r, spec.N - spec.r) for i in range(1, spec.N + 1)]


def gr_sequence_plain(spec, n_max, initial=None):
    """Integer terms x_1..x_{n_max} of the plain recurrence.

    `initial` gives x_1..x_N (default all ones).  Every division must be
    exact, otherwise IntegralityError is raised.
    """
    N, r, s = spec.N, spec.r, spec.s
    if initial is None:
        initial = [1] * N
    if len(initial) != N:
        raise ValueError(f"need {N} initial values")
    if any(v == 0 for v in initial):
        raise ValueError("initial values must be nonzero")
    seq = list(initial)
    for n in range(N + 1, n_max + 1):
        num = seq[n - r - 1] * seq[n - N + r - 1] + seq[n - s - 1] * seq[n - N + s - 1]
        den = seq[n - N - 1]
        if num % den != 0:
            raise IntegralityError(f"x_{n} = {num}/{den} is not an integer")
        seq.append(num // den)
    return seq[:n_max]


def gr_recurrence_principal(spec, n_max):
    """Laurent-polynomial terms x_1..x_{n_max} with principal coefficients.

    The exchange at step n multiplies the second binomial term by
    prod_i y_i^{d(n-N-i, r, N-r)}.  No quiver mutation is involved.
    """
    N, r, s = spec.N, spec.r, spec.s
    if n_max < N:
        raise ValueError(f"n_max must be at least N = {N}")
    seq = [LaurentPolynomial.x_var(N, i) for i in range(1, N + 1)]
    for n in range(N + 1, n_max + 1):
        first = seq[n - r - 1] * seq[n - N + r - 1]
        second = seq[n - s - 1] * seq[n - N + s - 1]
        for i, e in enumerate(principal_y_exponents(spec, n), start=1):
            if e:
                second = second * LaurentPolynomial.y_var(N, i, e)
        try:
            seq.append((first + second).div_exact(seq[n - N - 1]))
        except ExactDivisionError as exc:
            raise IntegralityError(f"exchange at n={n} not exact: {exc}") from exc
    return seq[:n_max]


__all__ = [
    "GRSpec",
    "validate_parameters",
    "ParameterOrderError",
    "CommonFactorError",
    "IntegralityError",
    "d",
    "d_popoviciu",
    "principal_y_exponents",
    "gr_sequence_plain",
    "gr_recurrence_principal",
]
