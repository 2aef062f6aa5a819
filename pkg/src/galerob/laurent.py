"""Exact sparse Laurent polynomials in x_1..x_N and y_1..y_N.

Every cluster variable, matching weight and covering monomial in this
package is a value of this type.  Exponents of the x-variables may be
negative; coefficients are arbitrary-precision integers.  Values are
immutable after construction and hashable, so they can be shared freely.
"""

from __future__ import annotations

import json
from fractions import Fraction


class DimensionMismatchError(ValueError):
    """Operands live in rings with different variable counts."""


class ExactDivisionError(ArithmeticError):
    """Division left a nonzero remainder (or divisor was zero)."""


class EvaluationError(ValueError):
    """Specialization hit 0**negative or produced a non-integer."""


class LaurentPolynomial:
    """A Laurent polynomial in 2N variables x_1..x_N, y_1..y_N.

    Terms are stored as a map from (x_exps, y_exps) exponent-vector
    pairs to nonzero integer coefficients.  The canonical term order is
    lexicographic on the concatenated exponent vector; it is used for
    equality of serialized forms and as the monomial order for exact
    division.
    """

    __slots__ = ("n", "terms", "_hash")

    def __init__(self, n, terms):
        self.n = n
        clean = {}
        for key, coeff in terms.items():
            if coeff == 0:
                continue
            xe, ye = key
            xe = tuple(xe)
            ye = tuple(ye)
            if len(xe) != n or len(ye) != n:
                raise DimensionMismatchError(
                    f"exponent vector length mismatch: expected {n}"
                )
            clean[(xe, ye)] = coeff
        self.terms = clean
        self._hash = None

    # ------------------------------------------------------------------
    # constructors

    @classmethod
    def zero(cls, n):
        return cls(n, {})

    @classmethod
    def const(cls, n, value):
        z = (0,) * n
        return cls(n, {(z, z): value})

    @classmethod
    def one(cls, n):
        return cls.const(n, 1)

    @classmethod
    def monomial(cls, n, x_exps, y_exps, coeff=1):
        return cls(n, {(tuple(x_exps), tuple(y_exps)): coeff})

    @classmethod
    def x_var(cls, n, i, power=1):
        """The variable x_i (1-based) raised to an integer power."""
        if not 1 <= i <= n:
            raise DimensionMismatchError(f"x index {i} out of range 1..{n}")
        xe = [0] * n
        xe[i - 1] = power
        return cls.monomial(n, xe, [0] * n)

    @classmethod
    def y_var(cls, n, i, power=1):
        if not 1 <= i <= n:
            raise DimensionMismatchError(f"y index {i} out of range 1..{n}")
        ye = [0] * n
        ye[i - 1] = power
        return cls.monomial(n, [0] * n, ye)

    # ------------------------------------------------------------------
    # ring structure

    def _check(self, other):
        if not isinstance(other, LaurentPolynomial):
            raise TypeError(f"cannot combine with {type(other).__name__}")
        if other.n != self.n:
            raise DimensionMismatchError(
                f"variable counts differ: {self.n} vs {other.n}"
            )

    def __add__(self, other):
        self._check(other)
        terms = dict(self.terms)
        for key, coeff in other.terms.items():
            new = terms.get(key, 0) + coeff
            if new:
                terms[key] = new
            else:
                terms.pop(key, None)
        return LaurentPolynomial(self.n, terms)

    def __neg__(self):
        return LaurentPolynomial(
            self.n, {key: -c for key, c in self.terms.items()}
        )

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        self._check(other)
        terms = {}
        for (xa, ya), ca in self.terms.items():
            for (xb, yb), cb in other.terms.items():
                key = (
                    tuple(p + q for p, q in zip(xa, xb)),
                    tuple(p + q for p, q in zip(ya, yb)),
                )
                new = terms.get(key, 0) + ca * cb
                if new:
                    terms[key] = new
                else:
                    del terms[key]
        return LaurentPolynomial(self.n, terms)

    def is_zero(self):
        return not self.terms

    def is_monomial(self):
        return len(self.terms) == 1

    def _leading_key(self):
        # max under lex order on the concatenated exponent vector
        return max(self.terms, key=lambda key: key[0] + key[1])

    def div_exact(self, other):
        """Exact division; raises ExactDivisionError on any remainder.

        Iterated leading-term elimination under the canonical order.
        The order is translation invariant, so when the quotient exists
        each step strips the quotient's current leading term and the
        loop ends after one step per quotient term.  A non-exact input
        would descend forever, so exponents of candidate quotient terms
        are confined to the box implied by the operands' supports.
        """
        self._check(other)
        if other.is_zero():
            raise ExactDivisionError("division by zero polynomial")
        if self.is_zero():
            return LaurentPolynomial.zero(self.n)

        n = self.n
        lead_q = other._leading_key()
        lead_qc = other.terms[lead_q]

        def flat(key):
            return key[0] + key[1]

        # componentwise exponent box for quotient terms
        p_keys = [flat(k) for k in self.terms]
        q_keys = [flat(k) for k in other.terms]
        lo = tuple(
            min(v[i] for v in p_keys) - max(v[i] for v in q_keys)
            for i in range(2 * n)
        )
        hi = tuple(
            max(v[i] for v in p_keys) - min(v[i] for v in q_keys)
            for i in range(2 * n)
        )

        rem = self
        quot_terms = {}
        lq = flat(lead_q)
        while not rem.is_zero():
            lr_key = rem._leading_key()
            coeff = rem.terms[lr_key]
            if coeff % lead_qc != 0:
                raise ExactDivisionError("leading coefficient does not divide")
            step = tuple(a - b for a, b in zip(flat(lr_key), lq))
            if any(step[i] < lo[i] or step[i] > hi[i] for i in range(2 * n)):
                raise ExactDivisionError("nonzero remainder")
            t_key = (step[:n], step[n:])
            c = coeff // lead_qc
            quot_terms[t_key] = quot_terms.get(t_key, 0) + c
            rem = rem - LaurentPolynomial.monomial(n, *t_key, c) * other
        return LaurentPolynomial(n, quot_terms)

    def inverse_monomial(self):
        """Inverse of a single-term polynomial with coefficient +-1."""
        if not self.is_monomial():
            raise ExactDivisionError("only monomials are invertible")
        (xe, ye), coeff = next(iter(self.terms.items()))
        if coeff not in (1, -1):
            raise ExactDivisionError("monomial coefficient is not a unit")
        return LaurentPolynomial.monomial(
            self.n, tuple(-e for e in xe), tuple(-e for e in ye), coeff
        )

    # ------------------------------------------------------------------
    # queries

    def specialize(self, x_values, y_values=None):
        """Exact integer evaluation at the given variable values.

        `x_values` and `y_values` are sequences of length N (y defaults
        to all ones).  Raises EvaluationError for 0**negative or when
        the exact value is not an integer.
        """
        if y_values is None:
            y_values = [1] * self.n
        x_values = list(x_values)
        y_values = list(y_values)
        if len(x_values) != self.n or len(y_values) != self.n:
            raise DimensionMismatchError("assignment length mismatch")
        total = Fraction(0)
        for (xe, ye), coeff in self.terms.items():
            val = Fraction(coeff)
            for base, exp in zip(x_values + y_values, xe + ye):
                if exp == 0:
                    continue
                if base == 0 and exp < 0:
                    raise EvaluationError("zero raised to a negative power")
                val *= Fraction(base) ** exp
            total += val
        if total.denominator != 1:
            raise EvaluationError(f"non-integer value {total}")
        return int(total)

    def sorted_terms(self):
        """Terms in canonical (descending lex) order."""
        return sorted(
            self.terms.items(), key=lambda kv: kv[0][0] + kv[0][1], reverse=True
        )

    def __eq__(self, other):
        return (
            isinstance(other, LaurentPolynomial)
            and self.n == other.n
            and self.terms == other.terms
        )

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.n, frozenset(self.terms.items())))
        return self._hash

    def __repr__(self):
        if self.is_zero():
            return "0"
        parts = []
        for (xe, ye), coeff in self.sorted_terms():
            factors = []
            if coeff != 1 or not any(xe) and not any(ye):
                factors.append(str(coeff))
            for sym, exps in (("x", xe), ("y", ye)):
                for i, e in enumerate(exps, start=1):
                    if e == 1:
                        factors.append(f"{sym}{i}")
                    elif e != 0:
                        factors.append(f"{sym}{i}^{e}")
            parts.append("*".join(factors))
        return " + ".join(parts)

    # ------------------------------------------------------------------
    # serialization

    def to_json_obj(self):
        return {
            "n": self.n,
            "terms": [
                {"coeff": str(coeff), "x": list(xe), "y": list(ye)}
                for (xe, ye), coeff in self.sorted_terms()
            ],
        }

    def to_json(self):
        return json.dumps(self.to_json_obj())

    @classmethod
    def from_json_obj(cls, obj):
        n = obj["n"]
        terms = {}
        for t in obj["terms"]:
            terms[(tuple(t["x"]), tuple(t["y"]))] = int(t["coeff"])
        return cls(n, terms)

    @classmethod
    def from_json(cls, text):
        return cls.from_json_obj(json.loads(text))


__all__ = [
    "LaurentPolynomial",
    "DimensionMismatchError",
    "ExactDivisionError",
    "EvaluationError",
]
