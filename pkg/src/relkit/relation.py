"""Linear relations in F^n as subspaces of F^n x F^n.

A relation keeps its ambient dimension ``n`` under every operation,
including graph restriction; the smaller space a restriction "lives in" is
recovered as ``dom + ran``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import AmbientMismatch, DoesNotSpan, NotDirect, SumNotEqualA
from .field import as_scalar
from .linalg import (
    Subspace,
    annihilator,
    _kernel_vectors,
    lincomb,
    span_sum,
    unit,
)


@dataclass(frozen=True)
class LinearRelation:
    n: int
    graph: Subspace

    def __post_init__(self):
        if self.graph.ambient_dim != 2 * self.n:
            raise AmbientMismatch(f"graph lives in F^{self.graph.ambient_dim}, expected F^{2 * self.n}")

    @classmethod
    def from_pairs(cls, n: int, pairs: Iterable[tuple[Sequence, Sequence]]) -> "LinearRelation":
        vecs = []
        for x, y in pairs:
            if len(x) != n or len(y) != n:
                raise AmbientMismatch(f"pair component of wrong length in F^{n}")
            vecs.append(tuple(as_scalar(a) for a in x) + tuple(as_scalar(a) for a in y))
        return cls(n, Subspace.span(vecs, 2 * n))

    @classmethod
    def from_matrix(cls, M: Sequence[Sequence]) -> "LinearRelation":
        """Graph ``{(x, Mx)}`` of a square matrix."""
        n = len(M)
        pairs = []
        for j in range(n):
            pairs.append((unit(j, n), tuple(as_scalar(M[i][j]) for i in range(n))))
        return cls.from_pairs(n, pairs)

    @classmethod
    def identity(cls, n: int) -> "LinearRelation":
        return cls.from_pairs(n, [(unit(i, n), unit(i, n)) for i in range(n)])

    @classmethod
    def zero(cls, n: int) -> "LinearRelation":
        """The relation ``{(0, 0)}``."""
        return cls(n, Subspace.zero(2 * n))

    @property
    def dim(self) -> int:
        return self.graph.dim

    def pairs(self) -> list[tuple[tuple, tuple]]:
        n = self.n
        return [(v[:n], v[n:]) for v in self.graph.basis]

    def X(self) -> list[tuple]:
        return [v[: self.n] for v in self.graph.basis]

    def Y(self) -> list[tuple]:
        return [v[self.n:] for v in self.graph.basis]

    def __contains__(self, pair) -> bool:
        x, y = pair
        return tuple(x) + tuple(y) in self.graph

    def __le__(self, other: "LinearRelation") -> bool:
        return self.graph <= other.graph

    def __repr__(self):
        return f"LinearRelation(n={self.n}, dim={self.dim})"


def _check(A: LinearRelation, B: LinearRelation):
    if A.n != B.n:
        raise AmbientMismatch(f"relations in F^{A.n} and F^{B.n}")


def _apply(coeffs, vectors, n):
    return lincomb(coeffs, vectors, n)


def _constrained(A: LinearRelation, block: str, S: Subspace) -> list[tuple]:
    """Coefficient vectors ``a`` of graph combinations whose ``block`` lies in S."""
    g = A.dim
    if S.dim == S.ambient_dim:
        return [tuple(Fraction(int(i == j)) for j in range(g)) for i in range(g)]
    vecs = A.X() if block == "x" else A.Y()
    N = annihilator(S)
    rows = [[sum((r[j] * v[j] for j in range(A.n) if r[j] != 0 and v[j] != 0), Fraction(0))
             for v in vecs] for r in N]
    return _kernel_vectors(rows, g)


def dom(A: LinearRelation) -> Subspace:
    return Subspace.span(A.X(), A.n)


def ran(A: LinearRelation) -> Subspace:
    return Subspace.span(A.Y(), A.n)


def ker(A: LinearRelation) -> Subspace:
    """``{x : (x, 0) in A}``."""
    return preimage(A, Subspace.zero(A.n))


def mul(A: LinearRelation) -> Subspace:
    """``{y : (0, y) in A}``."""
    return image(A, Subspace.zero(A.n))


def parts(A: LinearRelation):
    """``(dom, ran, ker, mul)``."""
    return dom(A), ran(A), ker(A), mul(A)


def hull(A: LinearRelation) -> Subspace:
    """``dom A + ran A``, the smallest X with ``A <= X x X``."""
    return Subspace.span(A.X() + A.Y(), A.n)


def image(A: LinearRelation, S: Subspace) -> Subspace:
    """``{y : (x, y) in A for some x in S}``."""
    coeffs = _constrained(A, "x", S)
    Y = A.Y()
    return Subspace.span([_apply(a, Y, A.n) for a in coeffs], A.n)


def preimage(A: LinearRelation, S: Subspace) -> Subspace:
    """``{x : (x, y) in A for some y in S}``."""
    coeffs = _constrained(A, "y", S)
    X = A.X()
    return Subspace.span([_apply(a, X, A.n) for a in coeffs], A.n)


def inverse(A: LinearRelation) -> LinearRelation:
    n = A.n
    return LinearRelation(n, Subspace.span([v[n:] + v[:n] for v in A.graph.basis], 2 * n))


def shift(A: LinearRelation, lam) -> LinearRelation:
    """``A - lam = {(x, y - lam x)}``."""
    lam = as_scalar(lam)
    if lam == 0:
        return A
    n = A.n
    vecs = [v[:n] + tuple(b - lam * a for a, b in zip(v[:n], v[n:])) for v in A.graph.basis]
    return LinearRelation(n, Subspace.span(vecs, 2 * n))


def scalar_mul(lam, A: LinearRelation) -> LinearRelation:
    """``lam A = {(x, lam y)}``."""
    lam = as_scalar(lam)
    n = A.n
    vecs = [v[:n] + tuple(lam * b for b in v[n:]) for v in A.graph.basis]
    return LinearRelation(n, Subspace.span(vecs, 2 * n))


def compose(A: LinearRelation, B: LinearRelation) -> LinearRelation:
    """Product ``AB = {(x, y) : (x, z) in B, (z, y) in A for some z}``."""
    _check(A, B)
    n = A.n
    gb, ga = B.dim, A.dim
    # match middle coordinates: Z_B b - X_A a = 0
    XB, ZB = B.X(), B.Y()
    ZA, YA = A.X(), A.Y()
    rows = []
    for i in range(n):
        rows.append([ZB[j][i] for j in range(gb)] + [-ZA[j][i] for j in range(ga)])
    if not rows:
        return LinearRelation.zero(n)
    sols = _kernel_vectors(rows, gb + ga)
    vecs = []
    for s in sols:
        x = lincomb(s[:gb], XB, n)
        y = lincomb(s[gb:], YA, n)
        vecs.append(x + y)
    return LinearRelation(n, Subspace.span(vecs, 2 * n))


def power(A: LinearRelation, k: int) -> LinearRelation:
    if k < 0:
        raise ValueError("negative power")
    P = LinearRelation.identity(A.n)
    for _ in range(k):
        P = compose(A, P)
    return P


def rel_sum(A: LinearRelation, B: LinearRelation) -> LinearRelation:
    """Operator-like sum ``{(x, y + z) : (x, y) in A, (x, z) in B}``."""
    _check(A, B)
    n = A.n
    XA, YA, XB, YB = A.X(), A.Y(), B.X(), B.Y()
    ga, gb = A.dim, B.dim
    rows = [[XA[j][i] for j in range(ga)] + [-XB[j][i] for j in range(gb)] for i in range(n)]
    if not rows:
        return LinearRelation.zero(n)
    vecs = []
    for s in _kernel_vectors(rows, ga + gb):
        x = lincomb(s[:ga], XA, n)
        y = tuple(a + b for a, b in zip(lincomb(s[:ga], YA, n), lincomb(s[ga:], YB, n)))
        vecs.append(x + y)
    return LinearRelation(n, Subspace.span(vecs, 2 * n))


def cw_sum(*rels: LinearRelation) -> LinearRelation:
    """Componentwise sum: the subspace sum of the graphs."""
    if not rels:
        raise ValueError("empty componentwise sum")
    for R in rels[1:]:
        _check(rels[0], R)
    return LinearRelation(rels[0].n, span_sum(*(R.graph for R in rels)))


def product_space(X: Subspace) -> Subspace:
    """``X x X`` inside F^(2n)."""
    n = X.ambient_dim
    z = (Fraction(0),) * n
    return Subspace.span([v + z for v in X.basis] + [z + v for v in X.basis], 2 * n)


def restrict(A: LinearRelation, X: Subspace) -> LinearRelation:
    """Graph restriction ``A ∩ (X x X)``."""
    if X.ambient_dim != A.n:
        raise AmbientMismatch("restriction space has the wrong ambient dimension")
    n = A.n
    if X.dim == n:
        return A
    N = annihilator(X)
    g = A.dim
    X_, Y_ = A.X(), A.Y()
    rows = []
    for r in N:
        rows.append([sum((r[j] * v[j] for j in range(n) if r[j] != 0 and v[j] != 0), Fraction(0)) for v in X_])
        rows.append([sum((r[j] * v[j] for j in range(n) if r[j] != 0 and v[j] != 0), Fraction(0)) for v in Y_])
    coeffs = _kernel_vectors(rows, g) if rows else []
    return LinearRelation(n, Subspace.span([lincomb(a, A.graph.basis, 2 * n) for a in coeffs], 2 * n))


# reducing sums --------------------------------------------------------------

@dataclass(frozen=True)
class ReducingDecomposition:
    component_spaces: tuple
    components: tuple


def is_direct(spaces: Sequence[Subspace]) -> bool:
    if not spaces:
        return True
    total = span_sum(*spaces)
    return total.dim == sum(S.dim for S in spaces)


def verify_reducing(A: LinearRelation, spaces: Sequence[Subspace]) -> ReducingDecomposition:
    """Check that graph restrictions to ``spaces`` form a reducing sum of A.

    Raises :class:`NotDirect`, :class:`DoesNotSpan` or
    :class:`SumNotEqualA` naming the failing clause.
    """
    spaces = list(spaces)
    H = hull(A)
    for S in spaces:
        if S.ambient_dim != A.n:
            raise AmbientMismatch("component space of wrong ambient dimension")
    if not is_direct(spaces):
        raise NotDirect("component spaces do not form a direct sum")
    total = span_sum(*spaces) if spaces else Subspace.zero(A.n)
    if total != H:
        raise DoesNotSpan(f"component spaces span dimension {total.dim}, dom A + ran A has {H.dim}")
    comps = [restrict(A, S) for S in spaces]
    recombined = cw_sum(*comps) if comps else LinearRelation.zero(A.n)
    if recombined != A:
        raise SumNotEqualA(
            f"componentwise sum of restrictions has dimension {recombined.dim}, A has {A.dim}"
        )
    if sum(C.dim for C in comps) != A.dim:
        raise NotDirect("componentwise sum of restrictions is not direct")
    for S, C in zip(spaces, comps):
        # each component fills its space once the whole thing reduces
        assert hull(C) == S, "component space differs from dom + ran of its component"
    return ReducingDecomposition(tuple(spaces), tuple(comps))
