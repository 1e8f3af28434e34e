"""Truncated formal power series over Q."""

from __future__ import annotations

from fractions import Fraction
from functools import reduce
from math import lcm
from typing import Iterable

from . import kernels


class Series:
    """Coefficients of x^0 .. x^order; nothing beyond ``order`` is known."""

    __slots__ = ("order", "coeffs")

    def __init__(self, coeffs: Iterable, order: int | None = None):
        cs = [Fraction(c) for c in coeffs]
        if order is None:
            order = len(cs) - 1
        if order < 0:
            raise ValueError("truncation order must be nonnegative")
        cs = cs[: order + 1] + [Fraction(0)] * (order + 1 - len(cs))
        self.order = order
        self.coeffs = tuple(cs)

    @classmethod
    def zero(cls, order: int) -> "Series":
        return cls([], order)

    @classmethod
    def one(cls, order: int) -> "Series":
        return cls([1], order)

    def __repr__(self) -> str:
        head = ", ".join(str(c) for c in self.coeffs[:8])
        more = ", ..." if self.order >= 8 else ""
        return f"Series([{head}{more}], order={self.order})"

    def __eq__(self, other) -> bool:
        if not isinstance(other, Series):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.order, self.coeffs))

    def __getitem__(self, n: int) -> Fraction:
        return coeff_of(self, n)

    def __add__(self, other: "Series") -> "Series":
        return series_add(self, other)

    def __neg__(self) -> "Series":
        return Series([-c for c in self.coeffs], self.order)

    def __sub__(self, other: "Series") -> "Series":
        return series_add(self, -other)

    def __mul__(self, other):
        if isinstance(other, Series):
            return series_mul(self, other)
        c = Fraction(other)
        return Series([x * c for x in self.coeffs], self.order)

    __rmul__ = __mul__

    def __pow__(self, r: int) -> "Series":
        return series_pow(self, r)

    def truncate(self, order: int) -> "Series":
        return Series(self.coeffs, min(order, self.order))

    def shift_up(self, k: int) -> "Series":
        """Multiply by x^k, keeping the truncation order."""
        return Series([Fraction(0)] * k + list(self.coeffs), self.order)

    def derivative(self) -> "Series":
        """Formal derivative; the top coefficient becomes unknown, so order drops by one."""
        if self.order == 0:
            raise ValueError("derivative of an order-0 series has no known coefficients")
        return Series([i * c for i, c in enumerate(self.coeffs)][1:], self.order - 1)


def series_add(a: Series, b: Series) -> Series:
    n = min(a.order, b.order)
    return Series([x + y for x, y in zip(a.coeffs[: n + 1], b.coeffs[: n + 1])], n)


def _as_integers(s: Series, n: int) -> tuple[list[int], int]:
    cs = s.coeffs[: n + 1]
    d = reduce(lcm, (c.denominator for c in cs), 1)
    return [int(c * d) for c in cs], d


def series_mul(a: Series, b: Series) -> Series:
    n = min(a.order, b.order)
    ai, da = _as_integers(a, n)
    bi, db = _as_integers(b, n)
    prod = kernels.convolve(ai, bi, n)
    d = da * db
    if d == 1:
        return Series(prod, n)
    return Series([Fraction(c, d) for c in prod], n)


def series_pow(a: Series, r: int) -> Series:
    """a^r for r >= 1 by binary exponentiation."""
    if r < 1:
        raise ValueError("series_pow needs r >= 1")
    result = None
    base = a
    while r:
        if r & 1:
            result = base if result is None else series_mul(result, base)
        r >>= 1
        if r:
            base = series_mul(base, base)
    return result


def coeff_of(a: Series, n: int) -> Fraction:
    if not 0 <= n <= a.order:
        raise IndexError(f"coefficient {n} outside truncation order {a.order}")
    return a.coeffs[n]


def poly_times_series(coeffs, s: Series) -> Series:
    """(sum c_i x^i) * s for a Poly/coefficient list in x."""
    cs = getattr(coeffs, "coeffs", coeffs)
    out = [Fraction(0)] * (s.order + 1)
    for i, c in enumerate(cs):
        if not c:
            continue
        for m in range(i, s.order + 1):
            out[m] += c * s.coeffs[m - i]
    return Series(out, s.order)


def substitute(P, s: Series) -> Series:
    """P(x, s(x)) for a BiPoly P, truncated at s.order."""
    ycs = P.y_coeffs()
    acc = Series.zero(s.order)
    for p in reversed(ycs):
        acc = series_add(series_mul(acc, s), poly_times_series(p, Series.one(s.order)))
    return acc
