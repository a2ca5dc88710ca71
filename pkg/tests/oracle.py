"""Naive sympy oracle for quotient dimensions.

Shares no code with relkit: relations are sympy column matrices of stacked
pairs, powers are formed by explicit composition, and eigenvalue candidates
come from the gcd of maximal minors of Y - tX.
"""

from __future__ import annotations

from itertools import combinations

import sympy as sp

t = sp.Symbol("t")


def rel(n, pairs):
    cols = [sp.Matrix(list(x) + list(y)) for x, y in pairs]
    return n, _colspace(cols, 2 * n)


def _colspace(cols, m):
    cols = [c for c in cols if any(v != 0 for v in c)]
    if not cols:
        return sp.zeros(m, 0)
    return sp.Matrix.hstack(*sp.Matrix.hstack(*cols).columnspace())


def _cols(M):
    return [M[:, j] for j in range(M.shape[1])]


def dim(S):
    return S.rank() if S.shape[1] else 0


def span_sum(U, V):
    return _colspace(_cols(U) + _cols(V), U.shape[0])


def intersect(U, V):
    m = U.shape[0]
    if U.shape[1] == 0 or V.shape[1] == 0:
        return sp.zeros(m, 0)
    N = sp.Matrix.hstack(U, -V).nullspace()
    return _colspace([U * v[: U.shape[1], :] for v in N], m)


def blocks(A):
    n, G = A
    return G[:n, :], G[n:, :]


def compose(A, B):
    """AB = {(x, y) : (x, z) in B, (z, y) in A}."""
    n = A[0]
    XA, YA = blocks(A)
    XB, ZB = blocks(B)
    gb, ga = XB.shape[1], XA.shape[1]
    if gb == 0 or ga == 0:
        return n, sp.zeros(2 * n, 0)
    N = sp.Matrix.hstack(ZB, -XA).nullspace()
    cols = [sp.Matrix.vstack(XB * v[:gb, :], YA * v[gb:, :]) for v in N]
    return n, _colspace(cols, 2 * n)


def identity(n):
    return n, sp.Matrix.vstack(sp.eye(n), sp.eye(n))


def powers(A, K):
    """``[A^0, A^1, ..., A^K]`` by repeated composition."""
    out = [identity(A[0])]
    for _ in range(K):
        out.append(compose(A, out[-1]))
    return out


def shift(A, lam):
    n, G = A
    X, Y = blocks(A)
    return n, _colspace(_cols(sp.Matrix.vstack(X, Y - lam * X)), 2 * n)


def inverse(A):
    X, Y = blocks(A)
    return A[0], sp.Matrix.vstack(Y, X)


def ker(A):
    n = A[0]
    X, Y = blocks(A)
    if X.shape[1] == 0:
        return sp.zeros(n, 0)
    return _colspace([X * v for v in Y.nullspace()], n)


def mul(A):
    return ker(inverse(A))


def ran(A):
    return _colspace(_cols(blocks(A)[1]), A[0])


def dom(A):
    return _colspace(_cols(blocks(A)[0]), A[0])


def full(n):
    return sp.eye(n) if n else sp.zeros(0, 0)


def rank_drop_polynomial(A):
    """gcd of the maximal minors of Y - tX; its roots are where the rank drops."""
    X, Y = blocks(A)
    g = X.shape[1]
    if g == 0:
        return sp.Integer(1)
    P = Y - t * X
    r = P.subs(t, sp.Rational(1000003, 7)).rank()
    if r == 0:
        return sp.Integer(1)
    gcd = sp.Integer(0)
    for rows in combinations(range(P.shape[0]), r):
        for cols in combinations(range(g), r):
            gcd = sp.gcd(gcd, sp.expand(P.extract(list(rows), list(cols)).det()))
            if gcd.is_number and gcd != 0:
                return sp.Integer(1)
    return gcd


def finite_eigen_candidates(A):
    """``(rational candidates, whether an irreducible factor of degree >= 2 occurs)``."""
    g = rank_drop_polynomial(A)
    if g.is_number:
        return [], False
    _, factors = sp.factor_list(sp.Poly(g, t, domain="QQ"))
    rational, irrational = set(), False
    for f, _ in factors:
        if f.degree() == 1:
            a, b = f.all_coeffs()
            rational.add(sp.Rational(-b, a))
        else:
            irrational = True
    return sorted(rational), irrational


def characteristic(A):
    """(B, {λ: W}, A, C) as tuples of positive ints, trailing zeros stripped."""
    n = A[0]
    K = n + 2
    pw = powers(A, K + 1)
    kers = [ker(P) for P in pw[: K + 1]]
    muls = [mul(P) for P in pw[: K + 1]]
    R0, Rinf = kers[K], muls[K]
    Rc = intersect(R0, Rinf)

    def strip(seq):
        seq = list(seq)
        while seq and seq[-1] == 0:
            seq.pop()
        return tuple(seq)

    B = strip(dim(intersect(kers[k], Rc)) - dim(intersect(kers[k - 1], Rc)) for k in range(1, K + 1))
    W = {}
    Rr = Rc
    cands, irrational = finite_eigen_candidates(A)
    for lam in cands:
        S = shift(A, lam)
        ks = [ker(P) for P in powers(S, K)]
        w = strip(dim(span_sum(ks[k], Rc)) - dim(span_sum(ks[k - 1], Rc)) for k in range(1, K + 1))
        if w:
            W[lam] = w
            Rr = span_sum(Rr, ks[K])
    Aseq = strip(dim(span_sum(muls[k], Rc)) - dim(span_sum(muls[k - 1], Rc)) for k in range(1, K + 1))
    if Aseq:
        Rr = span_sum(Rr, Rinf)
    rans = [ran(P) for P in pw]
    C = strip(dim(span_sum(rans[k], Rr)) - dim(span_sum(rans[k + 1], Rr)) for k in range(1, K + 1))
    H = span_sum(dom(A), ran(A))
    C0 = dim(H) - dim(span_sum(rans[1], Rr))
    return {"B": B, "W": W, "A": Aseq, "C": C, "C0": C0, "R_c": Rc, "R_r": Rr, "irrational": irrational}
