"""Exact scalars, univariate polynomials and elimination over F(lambda).

Rational scalars are plain :class:`fractions.Fraction` values.  Gaussian
rationals ``a + b*i`` are :class:`GaussianRational`; any arithmetic result
with zero imaginary part collapses back to a ``Fraction`` so that equal
numbers always have equal representations.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import DivisionByZero, ParseError, ZeroPolynomial

RATIONAL = "rational"
GAUSSIAN = "gaussian"
FIELDS = (RATIONAL, GAUSSIAN)


class GaussianRational:
    """A Gaussian rational ``re + im*i`` with ``im != 0``.

    Use :func:`gaussian` to build values; it returns a ``Fraction`` when
    the imaginary part vanishes.
    """

    __slots__ = ("re", "im")

    def __init__(self, re: Fraction, im: Fraction):
        self.re = Fraction(re)
        self.im = Fraction(im)

    # arithmetic -----------------------------------------------------------
    def __add__(self, other):
        o = _as_pair(other)
        if o is None:
            return NotImplemented
        return gaussian(self.re + o[0], self.im + o[1])

    __radd__ = __add__

    def __sub__(self, other):
        o = _as_pair(other)
        if o is None:
            return NotImplemented
        return gaussian(self.re - o[0], self.im - o[1])

    def __rsub__(self, other):
        o = _as_pair(other)
        if o is None:
            return NotImplemented
        return gaussian(o[0] - self.re, o[1] - self.im)

    def __mul__(self, other):
        o = _as_pair(other)
        if o is None:
            return NotImplemented
        a, b = self.re, self.im
        c, d = o
        return gaussian(a * c - b * d, a * d + b * c)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = _as_pair(other)
        if o is None:
            return NotImplemented
        return self * inv(gaussian(*o))

    def __rtruediv__(self, other):
        o = _as_pair(other)
        if o is None:
            return NotImplemented
        return gaussian(*o) * inv(self)

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __pos__(self):
        return self

    def conjugate(self):
        return GaussianRational(self.re, -self.im)

    # comparison -----------------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, GaussianRational):
            return self.re == other.re and self.im == other.im
        if isinstance(other, (int, Fraction)):
            return False
        return NotImplemented

    def __hash__(self):
        return hash((self.re, self.im))

    def __bool__(self):
        return True

    def __repr__(self):
        return f"GaussianRational({format_scalar(self)!r})"

    def __str__(self):
        return format_scalar(self)


def _as_pair(x):
    if isinstance(x, GaussianRational):
        return x.re, x.im
    if isinstance(x, (int, Fraction)):
        return Fraction(x), Fraction(0)
    return None


def gaussian(re, im=0):
    """Build a Gaussian rational, collapsing to ``Fraction`` when real."""
    re, im = Fraction(re), Fraction(im)
    if im == 0:
        return re
    return GaussianRational(re, im)


def as_scalar(x):
    if isinstance(x, (Fraction, GaussianRational)):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return parse_scalar(x)
    raise TypeError(f"not an exact scalar: {x!r}")


def inv(x):
    if x == 0:
        raise DivisionByZero("inverse of zero")
    if isinstance(x, GaussianRational):
        n = x.re * x.re + x.im * x.im
        return GaussianRational(x.re / n, -x.im / n)
    return 1 / Fraction(x)


def is_rational(x) -> bool:
    return not isinstance(x, GaussianRational)


def sort_key(x):
    """Total order on scalars: by real part, then imaginary part."""
    if isinstance(x, GaussianRational):
        return (x.re, x.im)
    return (Fraction(x), Fraction(0))


# serialization --------------------------------------------------------------

def _fmt_q(q: Fraction) -> str:
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def format_scalar(x) -> str:
    """``"p/q"`` (``q`` omitted when 1); Gaussian values as ``"p/q+r/si"``."""
    if isinstance(x, GaussianRational):
        re_s = _fmt_q(x.re)
        im_s = _fmt_q(abs(x.im))
        sign = "-" if x.im < 0 else "+"
        return f"{re_s}{sign}{im_s}i"
    return _fmt_q(Fraction(x))


_Q = r"[0-9]+(?:/[0-9]+)?"
_GAUSS_RE = re.compile(rf"^([+-]?{_Q})?(?:([+-])({_Q})?i)?$")
_PURE_IM_RE = re.compile(rf"^([+-]?)({_Q})?i$")


def parse_scalar(s: str):
    """Parse ``"3"``, ``"-2/5"``, ``"1/2+3/4i"``, ``"i"``, ``"-2i"``."""
    if isinstance(s, (int, Fraction, GaussianRational)):
        return as_scalar(s)
    if not isinstance(s, str):
        raise ParseError(f"scalar must be a string, got {s!r}")
    t = s.replace(" ", "")
    if not t:
        raise ParseError("empty scalar")
    try:
        m = _PURE_IM_RE.match(t)
        if m:
            mag = Fraction(m.group(2)) if m.group(2) else Fraction(1)
            return gaussian(0, -mag if m.group(1) == "-" else mag)
        m = _GAUSS_RE.match(t)
        if m and m.group(1) is not None:
            re_part = Fraction(m.group(1))
            if m.group(2) is None:
                return re_part
            mag = Fraction(m.group(3)) if m.group(3) else Fraction(1)
            return gaussian(re_part, -mag if m.group(2) == "-" else mag)
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError(f"bad scalar {s!r}: {exc}") from None
    raise ParseError(f"bad scalar {s!r}")


# polynomials ----------------------------------------------------------------

class Poly:
    """Univariate polynomial, coefficients stored low degree first."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        c = [as_scalar(a) for a in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.coeffs = tuple(c)

    @classmethod
    def constant(cls, a):
        return cls([a])

    @classmethod
    def x(cls):
        return cls([0, 1])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def lc(self):
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def __call__(self, t):
        acc = Fraction(0)
        for a in reversed(self.coeffs):
            acc = acc * t + a
        return acc

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction, GaussianRational)):
            return self.coeffs == Poly([other]).coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other):
        other = _as_poly(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        return Poly([x + (b[i] if i < len(b) else 0) for i, x in enumerate(a)])

    __radd__ = __add__

    def __neg__(self):
        return Poly([-a for a in self.coeffs])

    def __sub__(self, other):
        return self + (-_as_poly(other))

    def __rsub__(self, other):
        return _as_poly(other) - self

    def __mul__(self, other):
        other = _as_poly(other)
        if self.is_zero() or other.is_zero():
            return Poly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        out = Poly([1])
        for _ in range(k):
            out = out * self
        return out

    def divmod(self, other: "Poly"):
        other = _as_poly(other)
        if other.is_zero():
            raise DivisionByZero("polynomial division by zero")
        rem = list(self.coeffs)
        dq = other.degree
        lead_inv = inv(other.lc())
        quot = [Fraction(0)] * max(len(rem) - dq, 1)
        for i in range(len(rem) - dq - 1, -1, -1):
            c = rem[i + dq] * lead_inv
            quot[i] = c
            if c != 0:
                for j, b in enumerate(other.coeffs):
                    rem[i + j] -= c * b
        return Poly(quot), Poly(rem[:dq] if dq > 0 else [])

    def __floordiv__(self, other):
        return self.divmod(other)[0]

    def __mod__(self, other):
        return self.divmod(other)[1]

    def exact_div(self, other: "Poly") -> "Poly":
        q, r = self.divmod(other)
        if not r.is_zero():
            raise ArithmeticError("inexact polynomial division")
        return q

    def monic(self) -> "Poly":
        if self.is_zero():
            return self
        c = inv(self.lc())
        return Poly([a * c for a in self.coeffs])

    def derivative(self) -> "Poly":
        return Poly([i * a for i, a in enumerate(self.coeffs)][1:])

    def is_rational(self) -> bool:
        return all(is_rational(a) for a in self.coeffs)

    def __repr__(self):
        return f"Poly({format_poly(self)!r})"

    def __str__(self):
        return format_poly(self)


def _as_poly(x) -> Poly:
    if isinstance(x, Poly):
        return x
    return Poly([x])


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Monic gcd (zero polynomial if both are zero)."""
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


def format_poly(p: Poly, var: str = "λ") -> str:
    if p.is_zero():
        return "0"
    terms = []
    for k in range(p.degree, -1, -1):
        a = p.coeffs[k]
        if a == 0:
            continue
        if isinstance(a, GaussianRational):
            coef = f"({format_scalar(a)})"
            sign = "+"
        else:
            sign = "-" if a < 0 else "+"
            mag = abs(a)
            coef = "" if (mag == 1 and k > 0) else _fmt_q(mag)
        mono = "" if k == 0 else (var if k == 1 else f"{var}^{k}")
        body = coef + mono if coef else mono
        terms.append((sign, body))
    s = ""
    for i, (sign, body) in enumerate(terms):
        if i == 0:
            s = ("-" if sign == "-" else "") + body
        else:
            s += f" {sign} {body}"
    return s


# root finding ---------------------------------------------------------------

def _divisors(n: int) -> list[int]:
    n = abs(n)
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def _deflate(p: Poly, r) -> tuple[Poly, int]:
    """Divide out ``(x - r)`` as often as possible."""
    mult = 0
    lin = Poly([-r, 1])
    while p.degree >= 1 and p(r) == 0:
        p = p.exact_div(lin)
        mult += 1
    return p, mult


def _integer_coeffs(p: Poly) -> list[int]:
    den = 1
    for a in p.coeffs:
        den = den * a.denominator // math.gcd(den, a.denominator)
    ints = [int(a * den) for a in p.coeffs]
    g = 0
    for a in ints:
        g = math.gcd(g, a)
    return [a // g for a in ints]


def poly_rational_roots(p: Poly):
    """Rational roots with multiplicities plus the rootless remainder.

    Returns ``(roots, residual)`` where ``roots`` is a sorted list of
    ``(root, multiplicity)`` and ``residual`` a list holding the leftover
    factor of degree >= 2 (empty if it is constant; linear leftovers cannot
    occur).  The input must have rational coefficients.
    """
    if p.is_zero():
        raise ZeroPolynomial("zero polynomial has every root")
    if not p.is_rational():
        raise TypeError("poly_rational_roots needs rational coefficients")
    roots = []
    p, m0 = _deflate(p, Fraction(0))
    if m0:
        roots.append((Fraction(0), m0))
    if p.degree >= 1:
        ints = _integer_coeffs(p)
        a0, an = ints[0], ints[-1]
        cands = set()
        for num in _divisors(a0):
            for den in _divisors(an):
                cands.add(Fraction(num, den))
                cands.add(Fraction(-num, den))
        for r in sorted(cands):
            if p.degree < 1:
                break
            p, m = _deflate(p, r)
            if m:
                roots.append((r, m))
    roots.sort(key=lambda rm: sort_key(rm[0]))
    residual = [p.monic()] if p.degree >= 1 else []
    return roots, residual


def _gauss_divisors(a: int, b: int) -> list[tuple[int, int]]:
    """Gaussian integers dividing ``a + b i``, one per associate class."""
    norm = a * a + b * b
    out = []
    for d in _divisors(norm):
        x = 0
        while x * x <= d:
            y2 = d - x * x
            y = math.isqrt(y2)
            if y * y == y2:
                for (u, v) in {(x, y), (x, -y)}:
                    # (a+bi)/(u+vi) in Z[i] ?
                    re_num = a * u + b * v
                    im_num = b * u - a * v
                    if d and re_num % d == 0 and im_num % d == 0:
                        out.append((u, v))
            x += 1
    return out


def poly_gaussian_roots(p: Poly):
    """Roots in Q(i) with multiplicities plus the rootless remainder."""
    if p.is_zero():
        raise ZeroPolynomial("zero polynomial has every root")
    roots = []
    p, m0 = _deflate(p, Fraction(0))
    if m0:
        roots.append((Fraction(0), m0))
    if p.is_rational() and p.degree >= 1:
        rr, _ = poly_rational_roots(p)
        for r, _m in rr:
            p, m = _deflate(p, r)
            roots.append((r, m))
    if p.degree >= 1:
        # scale to Gaussian-integer coefficients
        den = 1
        for a in p.coeffs:
            re, im = _as_pair(a)
            for q in (re, im):
                den = den * q.denominator // math.gcd(den, q.denominator)
        gi = [(int(_as_pair(a)[0] * den), int(_as_pair(a)[1] * den)) for a in p.coeffs]
        nums = _gauss_divisors(*gi[0])
        dens = _gauss_divisors(*gi[-1])
        units = [gaussian(1), gaussian(0, 1), gaussian(-1), gaussian(0, -1)]
        cands = set()
        for (u, v) in nums:
            for (s, t) in dens:
                base = gaussian(u, v) / gaussian(s, t)
                for unit in units:
                    cands.add(base * unit)
        for r in sorted(cands, key=sort_key):
            if p.degree < 1:
                break
            p, m = _deflate(p, r)
            if m:
                roots.append((r, m))
    roots.sort(key=lambda rm: sort_key(rm[0]))
    residual = [p.monic()] if p.degree >= 1 else []
    return roots, residual


def poly_roots(p: Poly, field: str = RATIONAL):
    if field == GAUSSIAN:
        return poly_gaussian_roots(p)
    if field != RATIONAL:
        raise ValueError(f"unknown field {field!r}")
    if not p.is_rational():
        # Gaussian coefficients under the rational field: nothing splits
        # except roots that happen to be rational.
        rr, _ = poly_gaussian_roots(p)
        roots = [(r, m) for r, m in rr if is_rational(r)]
        rest = p
        for r, m in roots:
            for _ in range(m):
                rest = rest.exact_div(Poly([-r, 1]))
        return roots, ([rest.monic()] if rest.degree >= 1 else [])
    return poly_rational_roots(p)


# elimination over F(lambda) -------------------------------------------------

def _bareiss(M: Sequence[Sequence[Poly]]):
    """Fraction-free row reduction of a polynomial matrix.

    Returns ``(rank, pivots, sign)``.  The k-th pivot is (up to sign) a
    k x k minor of ``M``; ``sign`` tracks row swaps so that for a square
    full-rank input ``det(M) == sign * pivots[-1]``.
    """
    A = [[_as_poly(e) for e in row] for row in M]
    nrows = len(A)
    ncols = len(A[0]) if nrows else 0
    prev = Poly([1])
    pivots: list[Poly] = []
    sign = 1
    r = 0
    for c in range(ncols):
        if r >= nrows:
            break
        piv = None
        best = None
        for i in range(r, nrows):
            if not A[i][c].is_zero():
                # prefer low-degree pivots to keep entries small
                if best is None or A[i][c].degree < best:
                    piv, best = i, A[i][c].degree
        if piv is None:
            continue
        if piv != r:
            A[r], A[piv] = A[piv], A[r]
            sign = -sign
        p = A[r][c]
        for i in range(r + 1, nrows):
            a_ic = A[i][c]
            row_i = A[i]
            row_r = A[r]
            for j in range(c + 1, ncols):
                row_i[j] = (p * row_i[j] - a_ic * row_r[j]).exact_div(prev)
            row_i[c] = Poly()
        pivots.append(p)
        prev = p
        r += 1
    return r, pivots, sign


def function_field_pivots(M: Sequence[Sequence[Poly]]):
    """Generic rank of a polynomial matrix and its elimination pivots.

    For every scalar ``t`` that is not a root of any returned pivot
    polynomial, ``rank(M(t)) == generic_rank``.
    """
    if not M or not M[0]:
        return 0, []
    rank, pivots, _ = _bareiss(M)
    return rank, pivots


def poly_det(M: Sequence[Sequence[Poly]]) -> Poly:
    n = len(M)
    if n == 0:
        return Poly([1])
    if any(len(row) != n for row in M):
        raise ValueError("determinant of a non-square matrix")
    rank, pivots, sign = _bareiss(M)
    if rank < n:
        return Poly()
    return pivots[-1] * sign


def charpoly(M: Sequence[Sequence]) -> Poly:
    """``det(t*I - M)`` for a square scalar matrix."""
    n = len(M)
    rows = []
    for i in range(n):
        rows.append([
            (Poly([-M[i][j], 1]) if i == j else Poly([-M[i][j]]))
            for j in range(n)
        ])
    return poly_det(rows)


def linear_pencil(Y: Sequence[Sequence], X: Sequence[Sequence]) -> list[list[Poly]]:
    """The polynomial matrix ``Y - t*X``."""
    return [
        [Poly([Y[i][j], -X[i][j]]) for j in range(len(Y[i]))]
        for i in range(len(Y))
    ]


def full_rank_everywhere(P: Sequence[Sequence[Poly]], field: str = RATIONAL) -> bool:
    """True iff ``P(t)`` has full column rank for every ``t`` in C.

    Full column rank fails somewhere exactly when the gcd of all maximal
    minors is non-constant.  Minors are taken from Bareiss runs on row
    permutations first (cheap, usually enough), then exhaustively.
    """
    from itertools import combinations

    nrows = len(P)
    ncols = len(P[0]) if nrows else 0
    if ncols == 0:
        return True
    rank, _ = function_field_pivots(P)
    if rank < ncols:
        return False
    g = Poly()
    orders = [list(range(nrows))]
    orders.append(orders[0][::-1])
    for s in range(1, nrows):
        orders.append(orders[0][s:] + orders[0][:s])
    for order in orders:
        _, piv, _ = _bareiss([P[i] for i in order])
        g = poly_gcd(g, piv[-1])
        if g.degree == 0:
            return True
    for rows in combinations(range(nrows), ncols):
        g = poly_gcd(g, poly_det([P[i] for i in rows]))
        if g.degree == 0:
            return True
    return False
