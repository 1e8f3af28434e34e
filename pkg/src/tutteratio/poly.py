"""Dense univariate polynomials and rational functions over an exact field.

The coefficient field is either Q (``fractions.Fraction``) or a field of
rational functions built from this very module, so ``Poly`` over ``RatFun``
gives Q(n)[k].  Every object carries a ``level``: 0 for rationals, 1 for
polynomials/rational functions over Q, 2 for those over Q(n).  Operands of a
lower level act as scalars.
"""

from __future__ import annotations

from fractions import Fraction
from functools import reduce
from math import gcd, lcm
from typing import Callable, Iterable, Sequence


class PoleError(ZeroDivisionError):
    """Evaluation of a rational function at a root of its denominator."""


def level_of(x) -> int:
    return getattr(x, "level", 0)


def as_scalar(c):
    if isinstance(c, (int, Fraction)):
        return Fraction(c)
    return c


class Poly:
    """Polynomial with coefficient list indexed by degree, no trailing zeros."""

    __slots__ = ("coeffs", "level")

    def __init__(self, coeffs: Iterable = (), level: int | None = None):
        cs = [as_scalar(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)
        if level is None:
            level = 1 + max((level_of(c) for c in cs), default=0)
        self.level = level

    # construction helpers
    @classmethod
    def const(cls, c, level: int | None = None) -> "Poly":
        return cls([c], level)

    @classmethod
    def var(cls, level: int = 1) -> "Poly":
        return cls([0, 1], level)

    def _new(self, coeffs) -> "Poly":
        return Poly(coeffs, self.level)

    def zero(self) -> "Poly":
        return Poly((), self.level)

    def one(self) -> "Poly":
        return Poly([1], self.level)

    # basic queries
    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def lc(self):
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    def coeff(self, i: int):
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else Fraction(0)

    def __repr__(self) -> str:
        from .printing import poly_to_str

        return f"Poly({poly_to_str(self, 'x' if self.level == 1 else 'k')!r})"

    def __eq__(self, other) -> bool:
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs
        if level_of(other) >= self.level:
            return NotImplemented
        return self.coeffs == Poly([other], self.level).coeffs

    def __hash__(self) -> int:
        return hash(("Poly", self.coeffs))

    # arithmetic
    def _lift(self, other):
        """Return ``other`` as a Poly of our level, or None if it is not one."""
        if isinstance(other, Poly) and other.level == self.level:
            return other
        if level_of(other) < self.level:
            return Poly([other], self.level)
        return None

    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        a, b = self.coeffs, o.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return self._new(out)

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        return self._new([-c for c in self.coeffs])

    def __sub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        if level_of(other) < self.level:
            c = as_scalar(other)
            if c == 0:
                return self.zero()
            return self._new([x * c for x in self.coeffs])
        o = self._lift(other)
        if o is None:
            return NotImplemented
        a, b = self.coeffs, o.coeffs
        if not a or not b:
            return self.zero()
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x == 0:
                continue
            for j, y in enumerate(b):
                out[i + j] = out[i + j] + x * y
        return self._new(out)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "Poly":
        if e < 0:
            raise ValueError("negative exponent")
        result, base = self.one(), self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def __divmod__(self, other) -> tuple["Poly", "Poly"]:
        o = self._lift(other)
        if o is None:
            return NotImplemented
        if o.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        db = o.degree
        inv = 1 / o.lc if level_of(o.lc) else Fraction(1) / o.lc
        quo = [Fraction(0)] * max(len(rem) - db, 0)
        for i in range(len(rem) - 1, db - 1, -1):
            c = rem[i]
            if c == 0:
                continue
            f = c * inv
            quo[i - db] = f
            for j, y in enumerate(o.coeffs):
                rem[i - db + j] = rem[i - db + j] - f * y
        return self._new(quo), self._new(rem[:db] if db > 0 else [])

    def __floordiv__(self, other) -> "Poly":
        return divmod(self, other)[0]

    def __mod__(self, other) -> "Poly":
        return divmod(self, other)[1]

    def exact_div(self, other) -> "Poly":
        q, r = divmod(self, other)
        if r:
            raise ArithmeticError("inexact polynomial division")
        return q

    def scale(self, c) -> "Poly":
        return self * c

    def monic(self) -> "Poly":
        if self.is_zero():
            return self
        lc = self.lc
        if lc == 1:
            return self
        inv = 1 / lc if level_of(lc) else Fraction(1) / lc
        return self * inv

    # evaluation and transformation
    def __call__(self, x):
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def compose(self, q: "Poly") -> "Poly":
        acc = self.zero()
        for c in reversed(self.coeffs):
            acc = acc * q + c
        return acc

    def shift(self, s) -> "Poly":
        """p(x + s)."""
        if s == 0 or self.degree < 1:
            return self
        return self.compose(self._new([s, 1]))

    def derivative(self) -> "Poly":
        return self._new([i * c for i, c in enumerate(self.coeffs)][1:])

    def map_coeffs(self, f: Callable, level: int | None = None) -> "Poly":
        return Poly([f(c) for c in self.coeffs], self.level if level is None else level)

    # Q-specific helpers (level 1)
    def denominator_lcm(self) -> int:
        return reduce(lcm, (c.denominator for c in self.coeffs), 1)

    def integer_coeffs(self) -> list[int]:
        d = self.denominator_lcm()
        return [int(c * d) for c in self.coeffs]

    def primitive(self) -> "Poly":
        """Integer-cleared, content-free, positive leading coefficient (Q only)."""
        if self.is_zero():
            return self
        ints = self.integer_coeffs()
        g = reduce(gcd, ints)
        if ints[-1] < 0:
            g = -g
        return self._new([Fraction(c // g) for c in ints])


# ---------------------------------------------------------------------------
# gcd, resultant, interpolation
# ---------------------------------------------------------------------------

def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Monic greatest common divisor; gcd(0, 0) = 0."""
    if a.is_zero() or b.is_zero():
        return (b if a.is_zero() else a).monic()
    if a.degree == 0 or b.degree == 0:
        return a.one()
    if a.level == 1 and b.level == 1:
        g = _zgcd(a.integer_coeffs(), b.integer_coeffs())
        return Poly(g, 1).monic()
    if a.level == 2 and b.level == 2 and _over_q_of_n(a) and _over_q_of_n(b):
        g = _zzgcd(_to_zz(a), _to_zz(b))
        return Poly([RatFun(Poly(c, 1)) for c in g], 2).monic()
    while b:
        a, b = b, a % b
    return a.monic()


# Primitive remainder sequences on integer coefficient lists.  Z[n] elements are
# lists of ints (index = degree); Z[n][k] elements are lists of those.

def _ztrim(a: list) -> list:
    while a and not a[-1]:
        a.pop()
    return a


def _zcontent(a: list[int]) -> int:
    g = reduce(gcd, a, 0)
    return -g if a and a[-1] < 0 else g


def _zprimitive(a: list[int]) -> list[int]:
    g = _zcontent(a)
    return [x // g for x in a] if g not in (0, 1) else a


def _zprem(a: list[int], b: list[int]) -> list[int]:
    a = list(a)
    db, lb = len(b) - 1, b[-1]
    while len(a) - 1 >= db:
        c, s = a[-1], len(a) - 1 - db
        if lb != 1:
            a = [x * lb for x in a]
        for j, y in enumerate(b):
            a[s + j] -= c * y
        a.pop()
        _ztrim(a)
        if not a:
            break
    return a


def _zgcd(a: list[int], b: list[int]) -> list[int]:
    """Primitive gcd in Z[x], positive leading coefficient."""
    c = gcd(_zcontent(a), _zcontent(b))
    a, b = _zprimitive(a), _zprimitive(b)
    if len(a) < len(b):
        a, b = b, a
    while b:
        if len(b) == 1:
            return [c]
        a, b = b, _zprimitive(_zprem(a, b))
    g = _zprimitive(a)
    return [c * x for x in g]


def _zmul(a: list[int], b: list[int]) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _zsub(a: list[int], b: list[int]) -> list[int]:
    out = list(a) + [0] * (len(b) - len(a))
    for i, y in enumerate(b):
        out[i] -= y
    return _ztrim(out)


def _zdiv(a: list[int], b: list[int]) -> list[int]:
    """Exact quotient a / b in Z[x]."""
    a = list(a)
    db, lb = len(b) - 1, b[-1]
    q = [0] * max(len(a) - db, 0)
    for i in range(len(a) - 1, db - 1, -1):
        c = a[i]
        if not c:
            continue
        f, r = divmod(c, lb)
        if r:
            raise ArithmeticError("inexact division in Z[x]")
        q[i - db] = f
        for j, y in enumerate(b):
            a[i - db + j] -= f * y
    if any(a[:db]):
        raise ArithmeticError("inexact division in Z[x]")
    return _ztrim(q)


def _zzcontent(A: list[list[int]]) -> list[int]:
    g: list[int] = []
    for i, c in enumerate(A):
        if not c:
            continue
        g = _zgcd(g, c) if g else _zprimitive(c) if len(c) > 1 else [abs(c[0])]
        if len(g) == 1:
            # constant: only the integer content of the rest matters
            return [reduce(gcd, (x for d in A[i:] for x in d), g[0])]
    if g:
        ic = reduce(gcd, (x for d in A for x in d), 0)
        g = [x * ic for x in _zprimitive(g)]
    return g


def _zzprimitive(A: list[list[int]]) -> list[list[int]]:
    g = _zzcontent(A)
    if g == [1]:
        return A
    return [_zdiv(c, g) if c else [] for c in A]


def _zzprem(A: list[list[int]], B: list[list[int]]) -> list[list[int]]:
    A = list(A)
    db, lb = len(B) - 1, B[-1]
    while len(A) - 1 >= db:
        c, s = A[-1], len(A) - 1 - db
        A = [_zmul(x, lb) for x in A]
        for j, y in enumerate(B):
            A[s + j] = _zsub(A[s + j], _zmul(c, y))
        A.pop()
        _ztrim(A)
        if not A:
            break
    return A


def _zzgcd(A: list[list[int]], B: list[list[int]]) -> list[list[int]]:
    """gcd in Q(n)[k] computed as a primitive gcd in Z[n][k] (up to a unit of Q(n))."""
    A, B = _zzprimitive(A), _zzprimitive(B)
    if len(A) < len(B):
        A, B = B, A
    while B:
        if len(B) == 1:
            return [[1]]
        A, B = B, _zzprimitive(_zzprem(A, B))
    return A


def _over_q_of_n(a: Poly) -> bool:
    return all(isinstance(c, (RatFun, Fraction)) for c in a.coeffs)


def _to_zz(a: Poly) -> list[list[int]]:
    """Clear Q(n) denominators of a level-2 polynomial, giving an element of Z[n][k]."""
    nums, dens = [], []
    for c in a.coeffs:
        if isinstance(c, RatFun):
            nums.append(c.num)
            dens.append(c.den)
        else:
            nums.append(Poly([c], 1))
            dens.append(Poly([1], 1))
    L = [1]
    for d in dens:
        if d.degree > 0:
            di = d.integer_coeffs()
            L = _zmul(L, _zdiv(di, _zgcd(L, di)))
    out = []
    for nm, d in zip(nums, dens):
        if nm.is_zero():
            out.append([])
            continue
        di = d.integer_coeffs()
        # nm / d * L, with L / d exact up to a rational constant
        f = _zdiv(L, _zprimitive(di))
        scale = Fraction(d.denominator_lcm(), _zcontent(di)) if d.degree > 0 else 1 / d.coeffs[0]
        cs = Poly([Fraction(x) for x in _zmul(nm.integer_coeffs(), f)], 1)
        cs = cs * (scale / nm.denominator_lcm())
        out.append(cs)
    m = reduce(lcm, (c.denominator_lcm() for c in out if c), 1)
    return [[int(x * m) for x in c.coeffs] if c else [] for c in out]


def poly_xgcd(a: Poly, b: Poly) -> tuple[Poly, Poly, Poly]:
    """Return (g, s, t) with s*a + t*b = g = monic gcd(a, b)."""
    r0, r1 = a, b
    s0, s1 = a.one(), a.zero()
    t0, t1 = a.zero(), a.one()
    while r1:
        q, r = divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if r0.is_zero():
        return r0, s0, t0
    lc = r0.lc
    inv = 1 / lc if level_of(lc) else Fraction(1) / lc
    return r0 * inv, s0 * inv, t0 * inv


def squarefree_part(a: Poly) -> Poly:
    if a.degree < 1:
        return a
    return a.exact_div(poly_gcd(a, a.derivative()))


def resultant(a: Poly, b: Poly):
    """Res(a, b) = lc(a)^deg(b) * prod b(alpha) over roots alpha of a."""
    if a.is_zero() or b.is_zero():
        return Fraction(0)
    sign = 1
    acc = Fraction(1)
    while True:
        da, db = a.degree, b.degree
        if db == 0:
            return sign * acc * b.lc ** da
        if da == 0:
            return sign * acc * a.lc ** db
        r = a % b
        if r.is_zero():
            return Fraction(0)
        if (da * db) % 2:
            sign = -sign
        acc = acc * b.lc ** (da - r.degree)
        a, b = b, r


def interpolate(xs: Sequence, ys: Sequence, level: int = 1) -> Poly:
    """Newton interpolation through the points (xs[i], ys[i])."""
    n = len(xs)
    dd = [as_scalar(y) for y in ys]
    for j in range(1, n):
        for i in range(n - 1, j - 1, -1):
            dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - j])
    result = Poly([], level)
    for i in range(n - 1, -1, -1):
        result = result * Poly([-xs[i], 1], level) + dd[i]
    return result


def _iroot_ceil(n: int, k: int) -> int:
    """Smallest integer r >= 0 with r**k >= n."""
    if n <= 1:
        return max(n, 0)
    lo, hi = 0, 1 << (n.bit_length() // k + 1)
    while lo < hi:
        mid = (lo + hi) // 2
        if mid ** k >= n:
            hi = mid
        else:
            lo = mid + 1
    return lo


def root_bound(ints: Sequence[int]) -> int:
    """Fujiwara bound on the moduli of complex roots of an integer polynomial."""
    n = len(ints) - 1
    lead = abs(ints[-1])
    best = 0
    for i in range(1, n + 1):
        c = abs(ints[n - i])
        if not c:
            continue
        if i == n:
            c = Fraction(c, 2)
        q = Fraction(c, lead)
        ceil_q = -((-q.numerator) // q.denominator)
        best = max(best, _iroot_ceil(ceil_q, i))
    return 2 * best


def integer_roots(p: Poly) -> list[int]:
    """All integer roots of a polynomial over Q, by divisor test under a root bound."""
    if p.is_zero():
        raise ValueError("zero polynomial has every integer as a root")
    ints = p.integer_coeffs()
    roots = []
    v = 0
    while ints[v] == 0:
        v += 1
    if v:
        roots.append(0)
    ints = ints[v:]
    if len(ints) == 1:
        return roots
    c0 = abs(ints[0])
    bound = min(root_bound(ints), c0)
    for d in range(1, bound + 1):
        if c0 % d:
            continue
        for cand in (d, -d):
            acc = 0
            for c in reversed(ints):
                acc = acc * cand + c
            if acc == 0:
                roots.append(cand)
    return sorted(roots)


def rational_roots(p: Poly) -> list[Fraction]:
    """All rational roots, via integer roots of the monic transform."""
    if p.is_zero():
        raise ValueError("zero polynomial")
    ints = p.integer_coeffs()
    n = len(ints) - 1
    if n < 1:
        return []
    a = ints[-1]
    # lc^(n-1) * p(z / lc) is monic with integer coefficients
    monic = Poly([c * a ** (n - 1 - i) if i < n else 1 for i, c in enumerate(ints)])
    return sorted(Fraction(z, a) for z in integer_roots(monic))


# ---------------------------------------------------------------------------
# rational functions
# ---------------------------------------------------------------------------

class RatFun:
    """Quotient num/den of polynomials, reduced, with monic denominator."""

    __slots__ = ("num", "den", "level")

    def __init__(self, num, den=None, level: int | None = None, *, reduced: bool = False):
        if not isinstance(num, Poly):
            num = Poly([num], level)
        if den is None:
            den = num.one()
        elif not isinstance(den, Poly):
            den = Poly([den], num.level)
        if num.level != den.level:
            lv = max(num.level, den.level)
            num, den = Poly(num.coeffs, lv), Poly(den.coeffs, lv)
        if den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        if not reduced:
            if num.is_zero():
                den = num.one()
            else:
                if den.degree > 0:
                    g = poly_gcd(num, den)
                    if g.degree > 0:
                        num, den = num.exact_div(g), den.exact_div(g)
                lc = den.lc
                if lc != 1:
                    inv = 1 / lc if level_of(lc) else Fraction(1) / lc
                    num, den = num * inv, den * inv
        self.num = num
        self.den = den
        self.level = num.level

    @classmethod
    def var(cls, level: int = 1) -> "RatFun":
        return cls(Poly.var(level))

    def _lift(self, other):
        if level_of(other) < self.level:
            return RatFun(Poly([other], self.level))
        if isinstance(other, RatFun):
            return other if other.level == self.level else None
        if isinstance(other, Poly):
            return RatFun(other) if other.level == self.level else None
        return None

    def __repr__(self) -> str:
        from .printing import ratfun_to_str

        return f"RatFun({ratfun_to_str(self, 'n' if self.level == 1 else 'k')!r})"

    def __eq__(self, other) -> bool:
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self.num == o.num and self.den == o.den

    def __hash__(self) -> int:
        if self.den.degree == 0 and self.num.degree <= 0:
            return hash(self.num.coeff(0))
        return hash(("RatFun", self.num.coeffs, self.den.coeffs))

    def __bool__(self) -> bool:
        return not self.num.is_zero()

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_poly(self) -> bool:
        return self.den.degree == 0

    def is_constant(self) -> bool:
        return self.den.degree == 0 and self.num.degree <= 0

    def constant(self):
        if not self.is_constant():
            raise ValueError("not a constant")
        return self.num.coeff(0)

    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        if self.den == o.den:
            return RatFun(self.num + o.num, self.den)
        return RatFun(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self) -> "RatFun":
        return RatFun(-self.num, self.den, reduced=True)

    def __sub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        if o.is_constant():
            c = o.constant()
            return RatFun(self.num * c, self.den, reduced=c != 0)
        return RatFun(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def inverse(self) -> "RatFun":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero rational function")
        return RatFun(self.den, self.num)

    def __truediv__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, e: int) -> "RatFun":
        if e < 0:
            return self.inverse() ** (-e)
        return RatFun(self.num ** e, self.den ** e, reduced=True)

    def __call__(self, x):
        d = self.den(x)
        if d == 0:
            raise PoleError(f"pole at {x}")
        return self.num(x) / d

    def shift(self, s) -> "RatFun":
        return RatFun(self.num.shift(s), self.den.shift(s), reduced=True)

    def compose(self, q) -> "RatFun":
        """self(q) for q a Poly or RatFun of the same level."""
        q = self._lift(q)
        acc_n = RatFun(self.num.zero())
        for c in reversed(self.num.coeffs):
            acc_n = acc_n * q + c
        acc_d = RatFun(self.num.zero())
        for c in reversed(self.den.coeffs):
            acc_d = acc_d * q + c
        return acc_n / acc_d

    def derivative(self) -> "RatFun":
        return RatFun(
            self.num.derivative() * self.den - self.num * self.den.derivative(),
            self.den * self.den,
        )

    def map_coeffs(self, f: Callable, level: int | None = None) -> "RatFun":
        return RatFun(self.num.map_coeffs(f, level), self.den.map_coeffs(f, level))

    def integer_form(self) -> tuple[Poly, Poly]:
        """(N, D) integer polynomials with N/D = self, joint content 1, lc(D) > 0."""
        d = lcm(self.num.denominator_lcm(), self.den.denominator_lcm())
        n_ints = [int(c * d) for c in self.num.coeffs]
        d_ints = [int(c * d) for c in self.den.coeffs]
        g = reduce(gcd, n_ints + d_ints)
        if d_ints[-1] < 0:
            g = -g
        return Poly([c // g for c in n_ints]), Poly([c // g for c in d_ints])

    def limit_at_infinity(self):
        """Finite limit as the variable tends to infinity (Q only)."""
        if self.num.degree > self.den.degree:
            raise ValueError("rational function is unbounded at infinity")
        if self.num.degree < self.den.degree:
            return Fraction(0)
        return self.num.lc / self.den.lc


def ratfun_eval(f: RatFun, point) -> Fraction:
    """Exact value of ``f`` at ``point``; raises PoleError at a pole."""
    return f(point)


def clear_denominators(values: Sequence[RatFun]) -> tuple[list[Poly], RatFun]:
    """Scale level-1 rational functions to polynomials with trivial joint gcd.

    Returns the polynomials and the scale factor applied.
    """
    den = reduce(lambda a, b: a * b.den.exact_div(poly_gcd(a, b.den)),
                 [v for v in values], values[0].den.one())
    polys = [v.num * den.exact_div(v.den) for v in values]
    g = reduce(poly_gcd, [p for p in polys if p], polys[0].zero())
    if g.is_zero():
        return polys, RatFun(den)
    polys = [p.exact_div(g) for p in polys]
    # integer normalization: content-free, positive leading coefficient of the last nonzero
    ints = lcm(*[p.denominator_lcm() for p in polys if p]) if any(polys) else 1
    flat = [int(c * ints) for p in polys for c in p.coeffs]
    cg = reduce(gcd, flat, 0) or 1
    last = next(p for p in reversed(polys) if p)
    if last.lc < 0:
        cg = -cg
    f = Fraction(ints, cg)
    polys = [p * f for p in polys]
    return polys, RatFun(den * f, g)
