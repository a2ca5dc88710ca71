"""Chain bases and the Jordan-like reducing sum decomposition.

All chain constructions run top-down over a filtration of quotient levels:
heads are chosen at the highest level first, then every chain vector is
pushed one level down through a pair of A, and each lower level is topped
up with new heads by greedy basis completion.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .errors import NotAProperEigenvalue, UnsplitEigenvalues
from .field import RATIONAL, format_scalar, full_rank_everywhere, linear_pencil
from .linalg import Subspace, annihilator, extend_modulo, independent, lincomb, solve, span_sum, transpose, zero_vector
from .relation import (
    LinearRelation,
    ReducingDecomposition,
    dom,
    hull,
    inverse,
    ker,
    mul,
    ran,
    restrict,
    shift,
    verify_reducing,
)
from .spectral import (
    INF,
    SpectralData,
    is_proper_eigenvalue,
    ker_powers,
    ran_powers,
    singular_chain_space,
    spectral_data,
    total_root_space,
)
from .weyr import K_levels, M_levels, V_levels, WeyrCharacteristic, conjugate_partition, weyr_characteristic

SINGULAR = "singular"
JORDAN = "jordan"
JORDAN_INF = "jordan_inf"
SHIFT = "shift"


@dataclass(frozen=True)
class Chain:
    """A chain of vectors and the pairs of A it induces.

    ``vectors`` is ``x_1..x_k`` for singular and Jordan chains and
    ``x_0..x_p`` for shift chains.  ``length`` counts vectors, except for
    shift chains where it counts pairs.
    """

    kind: str
    vectors: tuple
    lam: object = None

    @property
    def n(self) -> int:
        return len(self.vectors[0])

    @property
    def length(self) -> int:
        k = len(self.vectors)
        return k - 1 if self.kind == SHIFT else k

    def pairs(self) -> list[tuple[tuple, tuple]]:
        v = self.vectors
        z = zero_vector(self.n)
        k = len(v)
        if self.kind == SINGULAR:
            out = [(z, v[-1])]
            out += [(v[j], v[j - 1]) for j in range(k - 1, 0, -1)]
            out.append((v[0], z))
            return out
        if self.kind == JORDAN:
            lam = self.lam
            out = [(v[0], tuple(lam * a for a in v[0]))]
            out += [(v[j], tuple(a + lam * b for a, b in zip(v[j - 1], v[j]))) for j in range(1, k)]
            return out
        if self.kind == JORDAN_INF:
            return [(z, v[0])] + [(v[j - 1], v[j]) for j in range(1, k)]
        if self.kind == SHIFT:
            return [(v[j - 1], v[j]) for j in range(1, k)]
        raise ValueError(f"unknown chain kind {self.kind!r}")

    def label(self) -> str:
        if self.kind == JORDAN:
            return f"jordan({format_scalar(self.lam)})"
        return self.kind


@dataclass(frozen=True)
class Part:
    relation: LinearRelation
    space: Subspace
    chains: tuple


def _pull(A: LinearRelation, x, S: Subspace, forward: bool):
    """Partner of ``x`` through a pair of A, constrained to lie in S.

    forward: find ``(x, y)`` in A with ``y`` in S and return ``y``;
    otherwise find ``(y, x)`` in A with ``y`` in S and return ``y``.
    """
    n = A.n
    g = A.dim
    src, dst = (A.X(), A.Y()) if forward else (A.Y(), A.X())
    rows = [[src[j][i] for j in range(g)] for i in range(n)]
    rhs = list(x)
    for r in annihilator(S):
        rows.append([sum((r[i] * v[i] for i in range(n) if r[i] != 0 and v[i] != 0), 0) for v in dst])
        rhs.append(0)
    a = solve(rows, rhs, g)
    if a is None:
        raise AssertionError("chain propagation failed: no pair with the required partner")
    return lincomb(a, dst, n)


def _top_down(levels: list[Subspace], candidates, step) -> list[list]:
    """Chains (top vector first) over an increasing filtration ``levels``.

    ``candidates(k)`` lists head candidates at level k and ``step(x, k)``
    maps a level-k vector to its level-(k-1) successor.
    """
    s = len(levels) - 1
    chains: list[list] = []
    for k in range(s, 0, -1):
        need = levels[k].dim - levels[k - 1].dim
        if k < s:
            for ch in chains:
                ch.append(step(ch[-1], k + 1))
        cur = [ch[-1] for ch in chains]
        base = span_sum(levels[k - 1], Subspace.span(cur, levels[k].ambient_dim))
        assert base.dim == levels[k - 1].dim + len(cur), "chain vectors became dependent"
        heads = extend_modulo(base, candidates(k), need - len(cur))
        assert len(heads) == need - len(cur), "not enough head candidates at a level"
        chains.extend([h] for h in heads)
    return chains


def _pairs_span(chains: Iterable[Chain], n: int) -> Subspace:
    return Subspace.span([tuple(x) + tuple(y) for ch in chains for x, y in ch.pairs()], 2 * n)


def _finish(A: LinearRelation, chains: list[Chain]) -> Part:
    n = A.n
    vecs = [v for ch in chains for v in ch.vectors]
    assert independent(vecs, n), "chain vectors are dependent"
    X = Subspace.span(vecs, n)
    R = restrict(A, X)
    assert R.graph == _pairs_span(chains, n), "chain pairs do not span the component"
    return Part(R, X, tuple(chains))


# singular part --------------------------------------------------------------

def singular_chains(A: LinearRelation, Rc: Subspace | None = None) -> list[Chain]:
    if Rc is None:
        Rc = singular_chain_space(A)
    levels = K_levels(A, Rc)
    kp = ker_powers(A)
    M = mul(A)
    # heads must be multivalued so that (0, head) is a pair of A
    cand = lambda k: (M & levels[k]).basis
    step = lambda x, k: _pull(A, x, kp[k - 1], forward=True)
    raw = _top_down(levels, cand, step)
    return [Chain(SINGULAR, tuple(reversed(ch))) for ch in raw]


def singular_part(A: LinearRelation, Rc: Subspace | None = None) -> Part:
    if Rc is None:
        Rc = singular_chain_space(A)
    part = _finish(A, singular_chains(A, Rc))
    assert part.space == Rc
    B = [sum(1 for ch in part.chains if ch.length >= k) for k in range(1, 1 + max((c.length for c in part.chains), default=0))]
    assert part.relation.dim == (2 * B[0] + sum(B[1:]) if B else 0)
    if Rc.dim:
        assert dom(part.relation) == Rc and ran(part.relation) == Rc
    return part


# Jordan parts ----------------------------------------------------------------

def _jordan_zero_chains(B: LinearRelation, Rc: Subspace) -> list[list]:
    """Jordan chains of B at 0 (bottom vector first) modulo the given R_c."""
    levels = V_levels(B, Rc)
    kp = ker_powers(B)
    cand = lambda k: kp[k].basis
    step = lambda x, k: _pull(B, x, kp[k - 1], forward=True)
    return [list(reversed(ch)) for ch in _top_down(levels, cand, step)]


def jordan_part_zero(A: LinearRelation, Rc: Subspace | None = None) -> Part:
    if Rc is None:
        Rc = singular_chain_space(A)
    chains = [Chain(JORDAN, tuple(v), 0) for v in _jordan_zero_chains(A, Rc)]
    part = _finish(A, chains)
    if chains:
        J = part.relation
        assert dom(J) == part.space and mul(J).dim == 0
    return part


def jordan_part(A: LinearRelation, lam, Rc: Subspace | None = None, check: bool = True) -> Part:
    if Rc is None:
        Rc = singular_chain_space(A)
    if check and not is_proper_eigenvalue(A, lam, Rc):
        raise NotAProperEigenvalue(f"{format_scalar(lam)} is not a proper eigenvalue")
    # chains of A at lam are the chains of A - lam at 0
    raw = _jordan_zero_chains(shift(A, lam), Rc)
    part = _finish(A, [Chain(JORDAN, tuple(v), lam) for v in raw])
    J = part.relation
    assert dom(J) == part.space and mul(J).dim == 0
    assert ker(shift(J, lam)).dim == len(raw)
    return part


def jordan_part_inf(A: LinearRelation, Rc: Subspace | None = None, check: bool = True) -> Part:
    if Rc is None:
        Rc = singular_chain_space(A)
    if check and not is_proper_eigenvalue(A, INF, Rc):
        raise NotAProperEigenvalue("∞ is not a proper eigenvalue")
    # chains at ∞ are the chains of the inverse at 0
    raw = _jordan_zero_chains(inverse(A), Rc)
    part = _finish(A, [Chain(JORDAN_INF, tuple(v)) for v in raw])
    J = part.relation
    assert ran(J) == part.space and ker(J).dim == 0
    return part


def root_part(A: LinearRelation, field: str = RATIONAL, extra_eigs: Iterable = (),
              spectral: SpectralData | None = None):
    """``(A_R, ReducingDecomposition of A_R)`` over R_c, X_λ, ..., X_∞."""
    sd = spectral or spectral_data(A, field, extra_eigs)
    if sd.unsplit_factors:
        raise UnsplitEigenvalues(sd.unsplit_factors)
    S = singular_part(A, sd.R_c)
    Js = [jordan_part(A, lam, sd.R_c, check=False) for lam in sd.proper_eigs]
    Jinf = jordan_part_inf(A, sd.R_c, check=False) if sd.has_inf_proper else None
    AR = restrict(A, sd.R_r)
    spaces = [S.space] + [J.space for J in Js] + ([Jinf.space] if Jinf else [])
    red = verify_reducing(AR, spaces)
    J0 = next((J for lam, J in zip(sd.proper_eigs, Js) if lam == 0), None)
    dom_J0 = dom(J0.relation) if J0 else Subspace.zero(A.n)
    ran_Jinf = ran(Jinf.relation) if Jinf else Subspace.zero(A.n)
    assert sd.R_r == dom(AR) + ran_Jinf == ran(AR) + dom_J0
    return AR, red


# multishift part ------------------------------------------------------------

def shift_chains(A: LinearRelation, Rr: Subspace | None = None) -> list[Chain]:
    if Rr is None:
        Rr = total_root_space(A)
    n = A.n
    rp = ran_powers(A)
    rpk = lambda k: rp[min(k, len(rp) - 1)]
    L = M_levels(A, Rr)  # L[j] = ran A^(j+1) + R_r
    top = len(L) - 1  # = m - 1
    chains: list[list] = []
    for k in range(top, 0, -1):
        need = L[k - 1].dim - L[k].dim
        if k < top:
            for ch in chains:
                ch.append(_pull(A, ch[-1], rpk(k), forward=False))
        cur = [ch[-1] for ch in chains]
        base = span_sum(L[k], Subspace.span(cur, n))
        assert base.dim == L[k].dim + len(cur), "shift chain vectors became dependent"
        heads = extend_modulo(base, rpk(k).basis, need - len(cur))
        assert len(heads) == need - len(cur), "not enough shift chain heads"
        chains.extend([h] for h in heads)
    for ch in chains:
        ch.append(_pull(A, ch[-1], Subspace.full(n), forward=False))
    if chains:
        base = span_sum(L[0], Subspace.span([ch[-1] for ch in chains], n))
        assert base == hull(A), "level 0 of the shift chains does not fill dom A + ran A"
    return [Chain(SHIFT, tuple(reversed(ch))) for ch in chains]


def multishift_certificate(AM: LinearRelation) -> bool:
    """True when AM is an operator without eigenvalues, ∞ included.

    ``ker(AM - t)`` is the image under X of ``ker(Y - tX)`` for a graph basis
    (X; Y); with ``mul AM = 0`` that kernel is trivial for every t exactly
    when the pencil ``Y - tX`` has full column rank everywhere.
    """
    if mul(AM).dim or ker(AM).dim:
        return False
    if AM.dim == 0:
        return True
    X = transpose(AM.X())
    Y = transpose(AM.Y())
    return full_rank_everywhere(linear_pencil(Y, X))


def multishift_part(A: LinearRelation, Rr: Subspace | None = None) -> Part:
    if Rr is None:
        Rr = total_root_space(A)
    part = _finish(A, shift_chains(A, Rr))
    assert multishift_certificate(part.relation), "multishift part has an eigenvalue"
    return part


# full decomposition ---------------------------------------------------------

@dataclass(frozen=True)
class JordanLikeDecomposition:
    A: LinearRelation
    spectral: SpectralData
    weyr: WeyrCharacteristic
    singular: Part
    jordan: tuple  # ((λ, Part), ...) sorted by λ
    jordan_inf: Part
    multishift: Part
    reducing: ReducingDecomposition

    @property
    def R_c(self) -> Subspace:
        return self.singular.space

    @property
    def R_m(self) -> Subspace:
        return self.multishift.space

    @property
    def X_inf(self) -> Subspace:
        return self.jordan_inf.space

    def X(self, lam) -> Subspace:
        return dict(self.jordan)[lam].space

    def parts(self) -> list[tuple[str, Part]]:
        out = [(SINGULAR, self.singular)]
        out += [(f"{JORDAN}({format_scalar(lam)})", P) for lam, P in self.jordan]
        out += [(JORDAN_INF, self.jordan_inf), (SHIFT, self.multishift)]
        return out

    @property
    def chains(self) -> list[Chain]:
        return [ch for _, P in self.parts() for ch in P.chains]

    @property
    def A_R(self) -> LinearRelation:
        return restrict(self.A, self.spectral.R_r)

    def ledger(self) -> dict:
        """Component graph dimensions next to the values the Weyr sequences predict."""
        wc = self.weyr
        rows = {SINGULAR: (self.singular.relation.dim, wc.dim_singular)}
        for lam, P in self.jordan:
            rows[f"{JORDAN}({format_scalar(lam)})"] = (P.relation.dim, wc.dim_jordan(lam))
        rows[JORDAN_INF] = (self.jordan_inf.relation.dim, wc.dim_inf)
        rows[SHIFT] = (self.multishift.relation.dim, wc.dim_shift)
        return rows


def _lengths_match(chains, seq) -> bool:
    lengths = sorted((c.length for c in chains), reverse=True)
    return lengths == conjugate_partition(seq)


def decompose(A: LinearRelation, field: str = RATIONAL, extra_eigs: Iterable = ()) -> JordanLikeDecomposition:
    sd = spectral_data(A, field, extra_eigs)
    if sd.unsplit_factors:
        raise UnsplitEigenvalues(sd.unsplit_factors)
    wc = weyr_characteristic(A, spectral=sd)
    n = A.n
    S = singular_part(A, sd.R_c)
    Js = tuple((lam, jordan_part(A, lam, sd.R_c, check=False)) for lam in sd.proper_eigs)
    empty = Part(LinearRelation.zero(n), Subspace.zero(n), ())
    Jinf = jordan_part_inf(A, sd.R_c, check=False) if sd.has_inf_proper else empty
    M = multishift_part(A, sd.R_r) if hull(A) != sd.R_r else empty

    spaces = [S.space] + [P.space for _, P in Js] + [Jinf.space, M.space]
    red = verify_reducing(A, spaces)
    D = JordanLikeDecomposition(A, sd, wc, S, Js, Jinf, M, red)

    assert span_sum(sd.R_c, *(P.space for _, P in Js), Jinf.space) == sd.R_r
    assert _lengths_match(S.chains, wc.B)
    for lam, P in Js:
        assert _lengths_match(P.chains, wc.W_map[lam])
    assert _lengths_match(Jinf.chains, wc.A)
    assert _lengths_match(M.chains, wc.C)
    for got, want in D.ledger().values():
        assert got == want, "component dimension disagrees with the Weyr characteristic"
    return D
