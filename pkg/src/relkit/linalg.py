"""Canonical subspaces of F^n and the subspace calculus.

A :class:`Subspace` stores the nonzero rows of the reduced row echelon form
of any spanning set, i.e. a reduced column echelon basis read column by
column.  The representation is unique, so ``==`` is subspace equality.

Matrices are lists of rows.  Vectors are tuples of scalars.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import AmbientMismatch, NotASubspace, NotInSpan
from .field import GaussianRational, as_scalar, inv

Vector = tuple
Matrix = Sequence[Sequence]

_ZERO = Fraction(0)
_ONE = Fraction(1)


# row reduction --------------------------------------------------------------

def _all_rational(rows) -> bool:
    for row in rows:
        for a in row:
            if type(a) is GaussianRational:
                return False
    return True


def _rref_int(rows: list[list], ncols: int):
    # Fraction-free Gauss-Jordan on integer rows, normalized at the end.
    M = []
    for row in rows:
        den = 1
        for a in row:
            d = a.denominator
            if d != 1:
                den = den * d // math.gcd(den, d)
        M.append([int(a * den) if den != 1 else int(a) for a in row])
    nrows = len(M)
    pivots = []
    r = 0
    for c in range(ncols):
        if r >= nrows:
            break
        piv = None
        for i in range(r, nrows):
            if M[i][c]:
                if piv is None or abs(M[i][c]) < abs(M[piv][c]):
                    piv = i
                    if abs(M[i][c]) == 1:
                        break
        if piv is None:
            continue
        M[r], M[piv] = M[piv], M[r]
        prow = M[r]
        p = prow[c]
        for i in range(nrows):
            if i == r:
                continue
            a = M[i][c]
            if a:
                row = [p * x - a * y for x, y in zip(M[i], prow)]
                g = math.gcd(*row)
                if g > 1:
                    row = [x // g for x in row]
                M[i] = row
        pivots.append(c)
        r += 1
    out = []
    for i, c in enumerate(pivots):
        p = M[i][c]
        out.append(tuple(Fraction(x, p) if x else _ZERO for x in M[i]))
    return out, pivots


def _rref_generic(rows: list[list], ncols: int):
    M = [list(row) for row in rows]
    nrows = len(M)
    pivots = []
    r = 0
    for c in range(ncols):
        if r >= nrows:
            break
        piv = None
        for i in range(r, nrows):
            if M[i][c] != 0:
                piv = i
                break
        if piv is None:
            continue
        M[r], M[piv] = M[piv], M[r]
        pinv = inv(M[r][c])
        M[r] = [x * pinv for x in M[r]]
        prow = M[r]
        for i in range(nrows):
            if i != r and M[i][c] != 0:
                a = M[i][c]
                M[i] = [x - a * y for x, y in zip(M[i], prow)]
        pivots.append(c)
        r += 1
    return [tuple(M[i]) for i in range(r)], pivots


def rref(rows: Matrix, ncols: int | None = None):
    """Reduced row echelon form: ``(nonzero_rows, pivot_columns)``."""
    rows = [list(r) for r in rows]
    if ncols is None:
        ncols = len(rows[0]) if rows else 0
    if not rows or ncols == 0:
        return [], []
    if _all_rational(rows):
        return _rref_int(rows, ncols)
    return _rref_generic(rows, ncols)


def rank(M: Matrix) -> int:
    return len(rref(M)[1])


# the subspace type ----------------------------------------------------------

@dataclass(frozen=True)
class Subspace:
    ambient_dim: int
    basis: tuple  # rows of the RREF; each is a basis vector

    @classmethod
    def span(cls, vectors: Iterable[Sequence], n: int) -> "Subspace":
        vecs = [tuple(v) for v in vectors]
        for v in vecs:
            if len(v) != n:
                raise AmbientMismatch(f"vector of length {len(v)} in F^{n}")
        vecs = [v for v in vecs if any(a != 0 for a in v)]
        if not vecs:
            return cls(n, ())
        R, _ = rref(vecs, n)
        return cls(n, tuple(R))

    @classmethod
    def zero(cls, n: int) -> "Subspace":
        return cls(n, ())

    @classmethod
    def full(cls, n: int) -> "Subspace":
        return cls(n, tuple(unit(i, n) for i in range(n)))

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def pivots(self) -> list[int]:
        out = []
        for v in self.basis:
            for j, a in enumerate(v):
                if a != 0:
                    out.append(j)
                    break
        return out

    def __add__(self, other: "Subspace") -> "Subspace":
        return span_sum(self, other)

    def __and__(self, other: "Subspace") -> "Subspace":
        return intersect(self, other)

    def __le__(self, other: "Subspace") -> bool:
        return contains(other, self)

    def __ge__(self, other: "Subspace") -> bool:
        return contains(self, other)

    def __contains__(self, x) -> bool:
        return member(x, self)

    def __repr__(self):
        from .field import format_scalar

        vecs = ", ".join("(" + ",".join(format_scalar(a) for a in v) + ")" for v in self.basis)
        return f"Subspace(n={self.ambient_dim}, [{vecs}])"


def unit(i: int, n: int) -> Vector:
    return tuple(_ONE if j == i else _ZERO for j in range(n))


def zero_vector(n: int) -> Vector:
    return (_ZERO,) * n


def vec(*entries) -> Vector:
    return tuple(as_scalar(a) for a in entries)


# vector helpers -------------------------------------------------------------

def vadd(u, v):
    return tuple(a + b for a, b in zip(u, v))


def vsub(u, v):
    return tuple(a - b for a, b in zip(u, v))


def vscale(c, v):
    return tuple(c * a for a in v)


def is_zero_vector(v) -> bool:
    return all(a == 0 for a in v)


def lincomb(coeffs: Sequence, vectors: Sequence[Sequence], n: int) -> Vector:
    out = [_ZERO] * n
    for c, v in zip(coeffs, vectors):
        if c != 0:
            for j in range(n):
                if v[j] != 0:
                    out[j] += c * v[j]
    return tuple(out)


def transpose(M: Matrix) -> list[list]:
    return [list(col) for col in zip(*M)]


def matmul(A: Matrix, B: Matrix) -> list[list]:
    Bt = list(zip(*B))
    return [[sum((a * b for a, b in zip(row, col)), _ZERO) for col in Bt] for row in A]


def matvec(A: Matrix, x: Sequence) -> Vector:
    return tuple(sum((a * b for a, b in zip(row, x)), _ZERO) for row in A)


# basic constructions --------------------------------------------------------

def _check(U: Subspace, V: Subspace):
    if U.ambient_dim != V.ambient_dim:
        raise AmbientMismatch(f"F^{U.ambient_dim} vs F^{V.ambient_dim}")


def column_space(M: Matrix, nrows: int | None = None) -> Subspace:
    """Span of the columns of ``M`` (given as a list of rows)."""
    n = len(M) if nrows is None else nrows
    cols = transpose(M) if M and M[0] else []
    return Subspace.span(cols, n)


def _kernel_vectors(M: Matrix, ncols: int) -> list[Vector]:
    R, piv = rref(M, ncols) if M else ([], [])
    free = [j for j in range(ncols) if j not in set(piv)]
    out = []
    for f in free:
        v = [_ZERO] * ncols
        v[f] = _ONE
        for i, p in enumerate(piv):
            v[p] = -R[i][f]
        out.append(tuple(v))
    return out


def kernel(M: Matrix, ncols: int | None = None) -> Subspace:
    """``{x : M x = 0}``; ``ncols`` is needed when ``M`` has no rows."""
    if ncols is None:
        if not M:
            raise ValueError("ncols required for an empty matrix")
        ncols = len(M[0])
    return Subspace.span(_kernel_vectors(M, ncols), ncols)


def annihilator(U: Subspace) -> list[Vector]:
    """Rows ``N`` with ``N x = 0`` exactly when ``x`` lies in ``U``."""
    n = U.ambient_dim
    piv = U.pivots
    pset = set(piv)
    out = []
    # U's basis is already an RREF, so its kernel is read off directly.
    for f in range(n):
        if f in pset:
            continue
        w = [_ZERO] * n
        w[f] = _ONE
        for i, p in enumerate(piv):
            w[p] = -U.basis[i][f]
        out.append(tuple(w))
    return out


def member(x: Sequence, U: Subspace) -> bool:
    if len(x) != U.ambient_dim:
        raise AmbientMismatch("vector length does not match ambient dimension")
    r = list(x)
    for v, p in zip(U.basis, U.pivots):
        c = r[p]
        if c != 0:
            for j in range(p, len(r)):
                if v[j] != 0:
                    r[j] -= c * v[j]
    return all(a == 0 for a in r)


def contains(U: Subspace, W: Subspace) -> bool:
    """``W <= U``."""
    _check(U, W)
    if W.dim > U.dim:
        return False
    return all(member(w, U) for w in W.basis)


def span_sum(*spaces: Subspace) -> Subspace:
    if not spaces:
        raise ValueError("empty sum")
    n = spaces[0].ambient_dim
    for S in spaces[1:]:
        _check(spaces[0], S)
    nonzero = [S for S in spaces if S.dim]
    if len(nonzero) <= 1:
        return nonzero[0] if nonzero else Subspace.zero(n)
    return Subspace.span([v for S in nonzero for v in S.basis], n)


def intersect(*spaces: Subspace) -> Subspace:
    if not spaces:
        raise ValueError("empty intersection")
    U = spaces[0]
    for V in spaces[1:]:
        _check(U, V)
        if U.dim == 0 or V.dim == U.ambient_dim:
            continue
        if V.dim == 0:
            U = V
            continue
        N = annihilator(V)
        # coefficients a with N (sum a_i u_i) = 0
        NU = [[sum((r[j] * u[j] for j in range(len(r)) if r[j] != 0 and u[j] != 0), _ZERO)
               for u in U.basis] for r in N]
        coeffs = _kernel_vectors(NU, U.dim)
        U = Subspace.span([lincomb(a, U.basis, U.ambient_dim) for a in coeffs], U.ambient_dim)
    return U


def quotient_dim(U: Subspace, W: Subspace) -> int:
    """``dim U/W``; raises :class:`NotASubspace` unless ``W <= U``."""
    if not contains(U, W):
        raise NotASubspace("denominator is not contained in numerator")
    return U.dim - W.dim


class _Echelon:
    """Incremental echelon basis used for greedy independence tests."""

    def __init__(self, n: int, vectors: Iterable = ()):
        self.n = n
        self.rows: list[tuple[int, list]] = []  # (pivot, row with pivot 1)
        for v in vectors:
            self.insert(v)

    def reduce(self, v) -> list:
        r = list(v)
        for p, row in self.rows:
            c = r[p]
            if c != 0:
                for j in range(self.n):
                    if row[j] != 0:
                        r[j] -= c * row[j]
        return r

    def insert(self, v) -> bool:
        r = self.reduce(v)
        for j, a in enumerate(r):
            if a != 0:
                ia = inv(a)
                self.rows.append((j, [x * ia for x in r]))
                return True
        return False

    @property
    def dim(self) -> int:
        return len(self.rows)


def extend_modulo(W: Subspace, candidates: Iterable[Sequence], limit: int | None = None) -> list[Vector]:
    """Greedily keep candidates that are independent modulo ``W`` (in order)."""
    ech = _Echelon(W.ambient_dim, W.basis)
    kept = []
    for c in candidates:
        if limit is not None and len(kept) >= limit:
            break
        if ech.insert(c):
            kept.append(tuple(c))
    return kept


def complete_basis(W: Subspace, U: Subspace) -> list[Vector]:
    """Vectors of ``U`` completing ``W`` to ``U``, drawn from U's canonical basis."""
    if not contains(U, W):
        raise NotASubspace("cannot complete: W is not inside U")
    kept = extend_modulo(W, U.basis)
    assert len(kept) == U.dim - W.dim
    return kept


def solve(M: Matrix, b: Sequence, ncols: int | None = None):
    """One solution of ``M x = b`` (free variables set to 0), or None."""
    if ncols is None:
        ncols = len(M[0]) if M else 0
    aug = [list(row) + [b[i]] for i, row in enumerate(M)]
    if not aug:
        return (_ZERO,) * ncols
    R, piv = rref(aug, ncols + 1)
    if piv and piv[-1] == ncols:
        return None
    x = [_ZERO] * ncols
    for i, p in enumerate(piv):
        x[p] = R[i][ncols]
    return tuple(x)


def coords(x: Sequence, basis: Sequence[Sequence]) -> Vector:
    """Coefficients of ``x`` in an independent ``basis``."""
    basis = [tuple(v) for v in basis]
    n = len(x)
    if not basis:
        if any(a != 0 for a in x):
            raise NotInSpan("nonzero vector, empty basis")
        return ()
    M = transpose(basis)
    c = solve(M, list(x), len(basis))
    if c is None:
        raise NotInSpan("vector is not in the span of the basis")
    if rank(M) != len(basis):
        raise ValueError("basis is not linearly independent")
    assert len(M) == n
    return c


def independent(vectors: Sequence[Sequence], n: int) -> bool:
    vecs = [tuple(v) for v in vectors]
    if not vecs:
        return True
    return rank(vecs) == len(vecs)


class CoordinateMap:
    """Coordinates with respect to a fixed independent basis, for many vectors.

    Only the pivot entries of a vector are read, so inputs must already lie in
    the span; :meth:`__call__` checks this unless ``check=False``.
    """

    def __init__(self, basis: Sequence[Sequence], n: int):
        self.basis = [tuple(v) for v in basis]
        self.n = n
        r = len(self.basis)
        self.span = Subspace.span(self.basis, n)
        if self.span.dim != r:
            raise ValueError("basis is not linearly independent")
        self.cols = self.span.pivots
        # G[i][j] = basis[i][cols[j]];  c G = x[cols]  =>  c = x[cols] G^{-1}
        aug = [[self.basis[i][c] for c in self.cols] + [_ONE if k == i else _ZERO for k in range(r)]
               for i in range(r)]
        # row reducing [G | I] gives [I | G^{-1}]
        R, _ = rref(aug, 2 * r) if r else ([], [])
        self.ginv = [list(row[r:]) for row in R]

    def __call__(self, x: Sequence, check: bool = True) -> Vector:
        if check and not member(x, self.span):
            raise NotInSpan("vector is not in the span of the basis")
        r = len(self.basis)
        xs = [x[c] for c in self.cols]
        return tuple(sum((xs[i] * self.ginv[i][j] for i in range(r) if xs[i] != 0), _ZERO)
                     for j in range(r))
