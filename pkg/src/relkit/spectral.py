"""Root spaces, the singular chain subspace and the proper point spectrum."""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from typing import Callable, Iterable

from .field import RATIONAL, Poly, as_scalar, charpoly, poly_roots, sort_key
from .linalg import CoordinateMap, Subspace, complete_basis, span_sum
from .relation import LinearRelation, image, mul, preimage, restrict, shift

INF = "inf"


def stabilize(step: Callable[[Subspace], Subspace], start: Subspace) -> list[Subspace]:
    """``[S_0, S_1, ..., S_K]`` with ``S_{k+1} = step(S_k)`` and ``S_K`` a fixed point.

    The fixed point is detected by canonical equality and is not repeated.
    """
    seq = [start]
    while True:
        nxt = step(seq[-1])
        if nxt == seq[-1]:
            return seq
        seq.append(nxt)
        if len(seq) > 2 * start.ambient_dim + 2:
            raise AssertionError("subspace iteration failed to stabilize")


def ker_powers(A: LinearRelation) -> list[Subspace]:
    """``ker A^k`` for ``k = 0, 1, ...`` up to stabilization."""
    return stabilize(lambda S: preimage(A, S), Subspace.zero(A.n))


def mul_powers(A: LinearRelation) -> list[Subspace]:
    """``mul A^k`` for ``k = 0, 1, ...`` up to stabilization."""
    return stabilize(lambda S: image(A, S), Subspace.zero(A.n))


def ran_powers(A: LinearRelation) -> list[Subspace]:
    """``ran A^k`` for ``k = 0, 1, ...``; index 0 is the whole space."""
    return stabilize(lambda S: image(A, S), Subspace.full(A.n))


def dom_powers(A: LinearRelation) -> list[Subspace]:
    return stabilize(lambda S: preimage(A, S), Subspace.full(A.n))


def root_space(A: LinearRelation, lam) -> Subspace:
    if lam == INF:
        return root_space_inf(A)
    return ker_powers(shift(A, lam))[-1]


def root_space_inf(A: LinearRelation) -> Subspace:
    return mul_powers(A)[-1]


def singular_chain_space(A: LinearRelation) -> Subspace:
    return root_space(A, 0) & root_space_inf(A)


def total_root_space(A: LinearRelation) -> Subspace:
    """Sum of all root spaces over the proper point spectrum and R_c.

    Computed without eigenvalues: the stable range ``ran A^K`` carries every
    root space except the one at 0 (plus R_c), so ``R_0 + ran A^K`` is the sum.
    """
    return root_space(A, 0) + ran_powers(A)[-1]


def in_point_spectrum(A: LinearRelation, lam) -> bool:
    """Plain point spectrum membership: ``ker(A - lam) != 0``, or ``mul A != 0`` at ∞."""
    if lam == INF:
        return mul(A).dim > 0
    return preimage(shift(A, lam), Subspace.zero(A.n)).dim > 0


def is_proper_eigenvalue(A: LinearRelation, lam, Rc: Subspace | None = None) -> bool:
    """Exact test ``ker(A - lam) + R_c != R_c`` (``mul A`` in place of the kernel at ∞)."""
    if Rc is None:
        Rc = singular_chain_space(A)
    if lam == INF:
        first = mul(A)
    else:
        first = preimage(shift(A, lam), Subspace.zero(A.n))
    return not first <= Rc


def quotient_operator(A: LinearRelation, Rr: Subspace, Rinf: Subspace) -> list[list]:
    """Matrix of the operator induced by A on ``R_r / R_inf``.

    On that quotient A acts as the direct sum of its finite Jordan parts, so
    its characteristic polynomial carries every finite proper eigenvalue with
    its algebraic multiplicity.
    """
    n = A.n
    Q = complete_basis(Rinf, Rr)
    t = len(Q)
    if t == 0:
        return []
    cm = CoordinateMap(list(Rinf.basis) + Q, n)
    r0 = Rinf.dim
    pairs = []
    for x, y in restrict(A, Rr).pairs():
        pairs.append((cm(x)[r0:], cm(y)[r0:]))
    B = LinearRelation.from_pairs(t, pairs)
    # the induced relation must be the graph of an everywhere defined operator
    if B.dim != t or any(v[:t] != tuple(int(i == j) for j in range(t)) for i, v in enumerate(B.graph.basis)):
        raise AssertionError("induced quotient relation is not an operator on R_r / R_inf")
    return [[B.graph.basis[j][t + i] for j in range(t)] for i in range(t)]


@dataclass(frozen=True)
class SpectralData:
    R_0: Subspace
    R_inf: Subspace
    R_c: Subspace
    R_r: Subspace
    proper_eigs: tuple
    has_inf_proper: bool
    root_spaces: dict
    unsplit_factors: tuple
    multiplicities: dict = dc_field(default_factory=dict)
    field: str = RATIONAL
    rejected_eigs: tuple = ()


def _deflate_by(f: Poly, mu) -> tuple[Poly, int]:
    lin = Poly([-mu, 1])
    k = 0
    while f.degree >= 1 and f(mu) == 0:
        f = f.exact_div(lin)
        k += 1
    return f, k


def proper_point_spectrum(A: LinearRelation, field: str = RATIONAL, extra_eigs: Iterable = ()):
    """``(eigenvalues, has_inf, unsplit_factors)`` of the proper point spectrum."""
    sd = spectral_data(A, field, extra_eigs)
    return list(sd.proper_eigs), sd.has_inf_proper, list(sd.unsplit_factors)


def spectral_data(A: LinearRelation, field: str = RATIONAL, extra_eigs: Iterable = ()) -> SpectralData:
    R0 = root_space(A, 0)
    Rinf = root_space_inf(A)
    Rc = R0 & Rinf
    Rr = total_root_space(A)
    has_inf = is_proper_eigenvalue(A, INF, Rc)

    M = quotient_operator(A, Rr, Rinf)
    chi = charpoly(M) if M else Poly([1])
    found, residual = poly_roots(chi, field)
    mult = {}
    eigs = []
    for lam, m in found:
        if not is_proper_eigenvalue(A, lam, Rc):
            raise AssertionError(f"characteristic root {lam} failed the eigenvector test")
        eigs.append(lam)
        mult[lam] = m

    residual = list(residual)
    rejected = []
    for mu in extra_eigs:
        mu = as_scalar(mu)
        if mu in mult:
            continue
        hit = False
        for i, f in enumerate(residual):
            if f(mu) == 0:
                g, k = _deflate_by(f, mu)
                if not is_proper_eigenvalue(A, mu, Rc):
                    break
                residual[i] = g
                eigs.append(mu)
                mult[mu] = k
                hit = True
                break
        if not hit:
            rejected.append(mu)
    residual = [f.monic() for f in residual if f.degree >= 1]

    eigs.sort(key=sort_key)
    roots = {lam: root_space(A, lam) for lam in eigs}
    if not residual:
        expected = span_sum(Rc, *roots.values(), *([Rinf] if has_inf else []))
        assert expected == Rr, "total root space disagrees with the sum of root spaces"
    return SpectralData(
        R_0=R0,
        R_inf=Rinf,
        R_c=Rc,
        R_r=Rr,
        proper_eigs=tuple(eigs),
        has_inf_proper=has_inf,
        root_spaces=roots,
        unsplit_factors=tuple(residual),
        multiplicities=mult,
        field=field,
        rejected_eigs=tuple(rejected),
    )
