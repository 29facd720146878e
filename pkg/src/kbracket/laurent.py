"""Exact integer Laurent polynomials in the single variable A.

Polynomials are stored as a map from integer degree to nonzero integer
coefficient.  Coefficients are plain Python ints, so nothing ever
overflows or rounds.  The zero polynomial is the empty map; asking it
for a span is an error rather than a sentinel.
"""

from __future__ import annotations

import json


class LaurentPoly:
    """Integer Laurent polynomial in A, immutable by convention."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs=None):
        d = {}
        if coeffs:
            for deg, c in dict(coeffs).items():
                if c != 0:
                    d[int(deg)] = int(c)
        self._coeffs = d

    @classmethod
    def zero(cls) -> "LaurentPoly":
        return cls()

    @classmethod
    def one(cls) -> "LaurentPoly":
        return cls({0: 1})

    @classmethod
    def monomial(cls, degree: int, coeff: int = 1) -> "LaurentPoly":
        return cls({degree: coeff})

    def coeff(self, degree: int) -> int:
        return self._coeffs.get(degree, 0)

    def items(self):
        return self._coeffs.items()

    def degrees(self):
        return set(self._coeffs)

    def is_zero(self) -> bool:
        return not self._coeffs

    def __bool__(self) -> bool:
        return bool(self._coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = LaurentPoly({0: other})
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self):
        return hash(frozenset(self._coeffs.items()))

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        out = dict(self._coeffs)
        for deg, c in other._coeffs.items():
            s = out.get(deg, 0) + c
            if s:
                out[deg] = s
            else:
                out.pop(deg, None)
        p = LaurentPoly.__new__(LaurentPoly)
        p._coeffs = out
        return p

    def __neg__(self) -> "LaurentPoly":
        p = LaurentPoly.__new__(LaurentPoly)
        p._coeffs = {deg: -c for deg, c in self._coeffs.items()}
        return p

    def __sub__(self, other: "LaurentPoly") -> "LaurentPoly":
        return self + (-other)

    def __mul__(self, other) -> "LaurentPoly":
        if isinstance(other, int):
            other = LaurentPoly({0: other})
        out: dict[int, int] = {}
        for d1, c1 in self._coeffs.items():
            for d2, c2 in other._coeffs.items():
                deg = d1 + d2
                s = out.get(deg, 0) + c1 * c2
                if s:
                    out[deg] = s
                else:
                    out.pop(deg, None)
        p = LaurentPoly.__new__(LaurentPoly)
        p._coeffs = out
        return p

    __rmul__ = __mul__

    def shift(self, k: int) -> "LaurentPoly":
        """Multiply by A^k."""
        p = LaurentPoly.__new__(LaurentPoly)
        p._coeffs = {deg + k: c for deg, c in self._coeffs.items()}
        return p

    def invert_variable(self) -> "LaurentPoly":
        """Substitute A -> A^-1."""
        p = LaurentPoly.__new__(LaurentPoly)
        p._coeffs = {-deg: c for deg, c in self._coeffs.items()}
        return p

    def min_degree(self) -> int:
        if not self._coeffs:
            raise ValueError("zero polynomial has no minimum degree")
        return min(self._coeffs)

    def max_degree(self) -> int:
        if not self._coeffs:
            raise ValueError("zero polynomial has no maximum degree")
        return max(self._coeffs)

    def __str__(self) -> str:
        if not self._coeffs:
            return "0"
        terms = []
        for deg in sorted(self._coeffs, reverse=True):
            c = self._coeffs[deg]
            if deg == 0:
                terms.append(str(c))
            else:
                terms.append(f"{c}*A^{deg}")
        return " + ".join(terms)

    def __repr__(self) -> str:
        return f"LaurentPoly({self._coeffs!r})"

    def to_pairs(self) -> list[list[int]]:
        """JSON form: [degree, coefficient] pairs in ascending degree order."""
        return [[deg, self._coeffs[deg]] for deg in sorted(self._coeffs)]

    @classmethod
    def from_pairs(cls, pairs) -> "LaurentPoly":
        return cls({int(d): int(c) for d, c in pairs})

    def to_json(self) -> str:
        return json.dumps(self.to_pairs())


def add(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly:
    return p + q


def mul(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly:
    return p * q


#: The loop factor -A^-2 - A^2; each extra circle in a state multiplies by it.
DELTA = LaurentPoly({-2: -1, 2: -1})

_delta_cache = [LaurentPoly.one()]


def delta_pow(k: int) -> LaurentPoly:
    """(-A^-2 - A^2)^k for k >= 0, cached."""
    if k < 0:
        raise ValueError("negative power of the loop factor is not used")
    while len(_delta_cache) <= k:
        _delta_cache.append(_delta_cache[-1] * DELTA)
    return _delta_cache[k]


def span_min_max(p: LaurentPoly) -> tuple[int, int, int]:
    """(min degree, max degree, span).  Errors on the zero polynomial."""
    if p.is_zero():
        raise ValueError("span of the zero polynomial is undefined")
    lo, hi = p.min_degree(), p.max_degree()
    return lo, hi, hi - lo
