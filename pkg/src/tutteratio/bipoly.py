"""Sparse bivariate polynomials over Q.

Keys are ``(deg_x, deg_y)``; the second variable is called ``y`` or ``k``
depending on context.  Zero coefficients are never stored.
"""

from __future__ import annotations

from fractions import Fraction
from functools import reduce
from math import gcd, lcm
from typing import Mapping

from .poly import Poly, RatFun


class BiPoly:
    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[tuple[int, int], object] | None = None):
        clean = {}
        for key, c in (terms or {}).items():
            c = Fraction(c)
            if c:
                clean[(int(key[0]), int(key[1]))] = c
        self.terms = clean

    @classmethod
    def x(cls) -> "BiPoly":
        return cls({(1, 0): 1})

    @classmethod
    def y(cls) -> "BiPoly":
        return cls({(0, 1): 1})

    @classmethod
    def from_y_coeffs(cls, coeffs) -> "BiPoly":
        """Build from a list of Polys in x, index = power of y."""
        return cls({(i, j): c for j, p in enumerate(coeffs) for i, c in enumerate(p.coeffs)})

    def coeff(self, i: int, j: int) -> Fraction:
        return self.terms.get((i, j), Fraction(0))

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    @property
    def degree_x(self) -> int:
        return max((i for i, _ in self.terms), default=-1)

    @property
    def degree_y(self) -> int:
        return max((j for _, j in self.terms), default=-1)

    def __eq__(self, other) -> bool:
        if isinstance(other, BiPoly):
            return self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self.terms == BiPoly({(0, 0): other}).terms
        return NotImplemented

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def __repr__(self) -> str:
        from .printing import bipoly_to_str

        return f"BiPoly({bipoly_to_str(self)!r})"

    def _coerce(self, other) -> "BiPoly | None":
        if isinstance(other, BiPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return BiPoly({(0, 0): other})
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        out = dict(self.terms)
        for k, c in o.terms.items():
            out[k] = out.get(k, 0) + c
        return BiPoly(out)

    __radd__ = __add__

    def __neg__(self) -> "BiPoly":
        return BiPoly({k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        out: dict[tuple[int, int], Fraction] = {}
        for (i1, j1), c1 in self.terms.items():
            for (i2, j2), c2 in o.terms.items():
                key = (i1 + i2, j1 + j2)
                out[key] = out.get(key, 0) + c1 * c2
        return BiPoly(out)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "BiPoly":
        result = BiPoly({(0, 0): 1})
        for _ in range(e):
            result = result * self
        return result

    def diff_x(self) -> "BiPoly":
        return BiPoly({(i - 1, j): i * c for (i, j), c in self.terms.items() if i})

    def diff_y(self) -> "BiPoly":
        return BiPoly({(i, j - 1): j * c for (i, j), c in self.terms.items() if j})

    def y_coeffs(self) -> list[Poly]:
        """Coefficients of y^0 .. y^deg_y as Polys in x."""
        dy = self.degree_y
        rows = [[Fraction(0)] * (self.degree_x + 1) for _ in range(dy + 1)]
        for (i, j), c in self.terms.items():
            rows[j][i] = c
        return [Poly(r) for r in rows]

    def as_poly_over_ratfun(self) -> Poly:
        """View as a polynomial in y with coefficients in Q(x)."""
        return Poly([RatFun(p) for p in self.y_coeffs()], level=2)

    def eval_x(self, x0) -> Poly:
        """Univariate polynomial in y obtained by fixing x = x0."""
        return Poly([p(Fraction(x0)) for p in self.y_coeffs()])

    def __call__(self, x0, y0) -> Fraction:
        return sum((c * Fraction(x0) ** i * Fraction(y0) ** j for (i, j), c in self.terms.items()),
                   Fraction(0))

    def canonical(self) -> "BiPoly":
        """Integer coefficients, content 1, leading graded-lex (y > x) term positive."""
        if not self.terms:
            return self
        d = reduce(lcm, (c.denominator for c in self.terms.values()), 1)
        ints = {k: int(c * d) for k, c in self.terms.items()}
        g = reduce(gcd, ints.values())
        lead = max(ints, key=graded_key)
        if ints[lead] < 0:
            g = -g
        return BiPoly({k: Fraction(v // g) for k, v in ints.items()})

    def sorted_terms(self) -> list[tuple[tuple[int, int], Fraction]]:
        return sorted(self.terms.items(), key=lambda kv: graded_key(kv[0]), reverse=True)


def graded_key(key: tuple[int, int]) -> tuple[int, int]:
    """Graded lexicographic key with y > x."""
    i, j = key
    return (i + j, j)
