"""Decomposition reports as JSON-ready dicts and as text."""

from __future__ import annotations

from .decompose import JORDAN, JORDAN_INF, SHIFT, SINGULAR, Chain, JordanLikeDecomposition, multishift_certificate
from .field import format_poly, format_scalar
from .jsonio import relation_to_json, subspace_to_json, vector_to_json
from .linalg import independent, span_sum
from .relation import cw_sum, hull


def _chain_json(ch: Chain) -> dict:
    d = {"kind": ch.kind, "length": ch.length, "vectors": [vector_to_json(v) for v in ch.vectors]}
    if ch.kind == JORDAN:
        d["lambda"] = format_scalar(ch.lam)
    return d


def verification(D: JordanLikeDecomposition) -> dict:
    A = D.A
    parts = [P for _, P in D.parts()]
    spaces = [P.space for P in parts]
    vecs = [v for ch in D.chains for v in ch.vectors]
    total = span_sum(*spaces)
    return {
        "spaces_direct": sum(S.dim for S in spaces) == total.dim,
        "spaces_span_dom_plus_ran": total == hull(A),
        "components_sum_to_A": cw_sum(*(P.relation for P in parts)) == A,
        "graph_sum_direct": sum(P.relation.dim for P in parts) == A.dim,
        "chain_pairs_in_A": all(p in A for ch in D.chains for p in ch.pairs()),
        "chain_vectors_independent": independent(vecs, A.n),
        "multishift_certificate": multishift_certificate(D.multishift.relation),
    }


def build_report(D: JordanLikeDecomposition, source: dict | None = None) -> dict:
    """Every number is recomputed from ``D`` here."""
    A = D.A
    sd = D.spectral
    ledger = {}
    for name, (got, want) in D.ledger().items():
        ledger[name] = {"dim": got, "from_weyr": want}
    ledger["total"] = {"dim": sum(v["dim"] for v in ledger.values()), "graph_dim": A.dim}
    return {
        "input": dict(source or {}, n=A.n, graph_dim=A.dim, space_dim=hull(A).dim),
        "spectral": {
            "field": sd.field,
            "proper_eigenvalues": [format_scalar(l) for l in sd.proper_eigs],
            "infinity_proper": sd.has_inf_proper,
            "unsplit_factors": [format_poly(f) for f in sd.unsplit_factors],
            "rejected_eigenvalues": [format_scalar(l) for l in sd.rejected_eigs],
        },
        "weyr": D.weyr.to_json(),
        "spaces": {
            "R_c": subspace_to_json(D.R_c),
            "R_r": subspace_to_json(sd.R_r),
            "R_inf": subspace_to_json(sd.R_inf),
            "X": {format_scalar(l): subspace_to_json(P.space) for l, P in D.jordan},
            "X_inf": subspace_to_json(D.X_inf),
            "R_m": subspace_to_json(D.R_m),
        },
        "components": {
            SINGULAR: relation_to_json(D.singular.relation)["pairs"],
            JORDAN: {format_scalar(l): relation_to_json(P.relation)["pairs"] for l, P in D.jordan},
            JORDAN_INF: relation_to_json(D.jordan_inf.relation)["pairs"],
            SHIFT: relation_to_json(D.multishift.relation)["pairs"],
        },
        "chains": [_chain_json(ch) for ch in D.chains],
        "ledger": ledger,
        "verification": verification(D),
    }


# text -----------------------------------------------------------------------

def _vec(v) -> str:
    return "(" + ", ".join(format_scalar(a) for a in v) + ")"


def _seq(s) -> str:
    return "(" + ", ".join(str(a) for a in s) + ")"


def _rows(chains: list[Chain], kind: str, lam=None) -> list[str]:
    """One row per chain, longest first, so rows shrink like a staircase."""
    lines = []
    names = []
    for i, ch in enumerate(chains, 1):
        k = len(ch.vectors)
        base = 0 if kind == SHIFT else 1
        nm = [f"x{j + base}^{i}" for j in range(k)]
        names.append((nm, ch.vectors))
        if kind == SINGULAR:
            seq = [f"(0, {nm[-1]})"] + [f"({nm[j]}, {nm[j - 1]})" for j in range(k - 1, 0, -1)] + [f"({nm[0]}, 0)"]
        elif kind == JORDAN:
            l = format_scalar(lam)
            seq = [f"({nm[j]}, {nm[j - 1]} + {l}·{nm[j]})" for j in range(k - 1, 0, -1)] + [f"({nm[0]}, {l}·{nm[0]})"]
        elif kind == JORDAN_INF:
            seq = [f"(0, {nm[0]})"] + [f"({nm[j - 1]}, {nm[j]})" for j in range(1, k)]
        else:
            seq = [f"({nm[j - 1]}, {nm[j]})" for j in range(1, k)]
        lines.append(f"    {', '.join(seq)}")
    for nm, vecs in names:
        for a, v in zip(nm, vecs):
            lines.append(f"      {a} = {_vec(v)}")
    return lines


def format_text(D: JordanLikeDecomposition) -> str:
    A = D.A
    sd = D.spectral
    wc = D.weyr
    eigs = [format_scalar(l) for l in sd.proper_eigs] + (["∞"] if sd.has_inf_proper else [])
    out = [
        f"relation in F^{A.n}: dim A = {A.dim}, dim(dom A + ran A) = {hull(A).dim}",
        f"proper point spectrum: {{{', '.join(eigs)}}}",
        f"R_c = span{{{', '.join(_vec(v) for v in D.R_c.basis)}}}",
        f"R_r = span{{{', '.join(_vec(v) for v in sd.R_r.basis)}}}",
        "",
        "Weyr characteristic:",
        f"  B = {_seq(wc.B)}",
    ]
    for lam, s in wc.W:
        out.append(f"  W({format_scalar(lam)}) = {_seq(s)}")
    out.append(f"  A = {_seq(wc.A)}")
    out.append(f"  C = {_seq(wc.C)}  (C_0 = C_1 = {wc.C0})")
    out.append("")
    sections = [("singular part A_S", D.singular, SINGULAR, None)]
    sections += [(f"Jordan part at {format_scalar(l)}", P, JORDAN, l) for l, P in D.jordan]
    sections += [("Jordan part at ∞", D.jordan_inf, JORDAN_INF, None), ("multishift part A_M", D.multishift, SHIFT, None)]
    for title, P, kind, lam in sections:
        if not P.chains:
            continue
        out.append(f"{title}: dim {P.relation.dim}, space dim {P.space.dim}")
        out += _rows(list(P.chains), kind, lam)
        out.append("")
    out.append("dimension ledger:")
    total = 0
    for name, (got, want) in D.ledger().items():
        total += got
        out.append(f"  {name:<16} {got:>3}  (from Weyr: {want})")
    out.append(f"  {'total':<16} {total:>3}  (dim A = {A.dim})")
    checks = verification(D)
    out.append("")
    out.append("checks: " + ", ".join(f"{k}={'ok' if v else 'FAILED'}" for k, v in checks.items()))
    return "\n".join(out) + "\n"
