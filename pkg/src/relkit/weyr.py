"""Weyr sequences B, W(λ), A, C and the Weyr characteristic."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping

from .errors import MalformedCharacteristic, UnsplitEigenvalues
from .field import RATIONAL, format_scalar, parse_scalar, sort_key
from .linalg import Subspace
from .relation import LinearRelation, hull, inverse, shift
from .spectral import (
    SpectralData,
    ker_powers,
    ran_powers,
    singular_chain_space,
    spectral_data,
    total_root_space,
)


@dataclass(frozen=True)
class WeyrSeq:
    entries: tuple
    stop_index: int
    c0: int | None = None  # only for the multishift sequence

    def __len__(self):
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    @property
    def total(self) -> int:
        return sum(self.entries)


def _qdim(num: Subspace, den: Subspace) -> int:
    assert den <= num, "quotient denominator not contained in numerator"
    return num.dim - den.dim


def _levels_to_seq(levels: list[Subspace]) -> WeyrSeq:
    # levels[0] <= levels[1] <= ... with the last one stable
    entries = tuple(_qdim(levels[k], levels[k - 1]) for k in range(1, len(levels)))
    return WeyrSeq(entries, len(entries))


def V_levels(A: LinearRelation, Rc: Subspace | None = None) -> list[Subspace]:
    """``ker A^k + R_c`` for k = 0, 1, ... until it stops growing."""
    if Rc is None:
        Rc = singular_chain_space(A)
    out = []
    for K in ker_powers(A):
        S = K + Rc
        if out and S == out[-1]:
            break
        out.append(S)
    return out


def K_levels(A: LinearRelation, Rc: Subspace | None = None) -> list[Subspace]:
    """``ker A^k ∩ R_c`` for k = 0, 1, ... until it stops growing."""
    if Rc is None:
        Rc = singular_chain_space(A)
    out = []
    for K in ker_powers(A):
        S = K & Rc
        if out and S == out[-1]:
            break
        out.append(S)
    return out


def weyr_B(A: LinearRelation, Rc: Subspace | None = None) -> WeyrSeq:
    return _levels_to_seq(K_levels(A, Rc))


def weyr_V(A: LinearRelation, Rc: Subspace | None = None) -> WeyrSeq:
    """The sequence at the eigenvalue 0."""
    return _levels_to_seq(V_levels(A, Rc))


def weyr_W(A: LinearRelation, lam, Rc: Subspace | None = None) -> WeyrSeq:
    # R_c is invariant under shifts, so a precomputed one may be reused
    return weyr_V(shift(A, lam), Rc)


def weyr_A(A: LinearRelation, Rc: Subspace | None = None) -> WeyrSeq:
    # R_c is invariant under inversion as well
    return weyr_V(inverse(A), Rc)


def M_levels(A: LinearRelation, Rr: Subspace | None = None) -> list[Subspace]:
    """``ran A^k + R_r`` for k = 1, 2, ... until it stops shrinking."""
    if Rr is None:
        Rr = total_root_space(A)
    rp = ran_powers(A)
    out = []
    # when ran A is already everything, rp has the single entry ran A^0
    for R in rp[1:] or rp:
        S = R + Rr
        if out and S == out[-1]:
            break
        out.append(S)
    return out


def weyr_C(A: LinearRelation, Rr: Subspace | None = None) -> WeyrSeq:
    if Rr is None:
        Rr = total_root_space(A)
    H = hull(A)
    levels = M_levels(A, Rr)
    c0 = _qdim(H, levels[0])
    entries = tuple(_qdim(levels[k - 1], levels[k]) for k in range(1, len(levels)))
    if not entries:
        assert c0 == 0 and H == Rr
        return WeyrSeq((), 0, 0)
    # m is the first k with ran A^(k+1) + R_r = ran A^k + R_r
    return WeyrSeq(entries, len(entries) + 1, c0)


def conjugate_partition(seq) -> list[int]:
    """Conjugate of a nonincreasing sequence, as a nonincreasing list."""
    seq = list(seq)
    if not seq:
        return []
    return [sum(1 for a in seq if a >= j) for j in range(1, seq[0] + 1)]


@dataclass(frozen=True)
class WeyrCharacteristic:
    B: tuple = ()
    W: tuple = ()  # sorted ((λ, entries), ...)
    A: tuple = ()
    C: tuple = ()  # C_1, C_2, ...; C_0 = C_1 by convention

    @classmethod
    def make(cls, B=(), W: Mapping | Iterable = (), A=(), C=()) -> "WeyrCharacteristic":
        items = W.items() if isinstance(W, Mapping) else W
        Wt = tuple(sorted(((lam, tuple(seq)) for lam, seq in items), key=lambda p: sort_key(p[0])))
        wc = cls(tuple(B), Wt, tuple(A), tuple(C))
        wc.validate()
        return wc

    @property
    def W_map(self) -> dict:
        return dict(self.W)

    @property
    def C0(self) -> int:
        return self.C[0] if self.C else 0

    @property
    def eigenvalues(self) -> list:
        return [lam for lam, _ in self.W]

    def validate(self):
        named = [("B", self.B), ("A", self.A), ("C", self.C)]
        named += [(f"W({format_scalar(lam)})", seq) for lam, seq in self.W]
        for name, seq in named:
            for k, a in enumerate(seq):
                if not isinstance(a, int) or a <= 0:
                    raise MalformedCharacteristic(f"{name}: entry {k + 1} must be a positive integer")
                if k and a > seq[k - 1]:
                    raise MalformedCharacteristic(f"{name}: entries must be nonincreasing")
        for lam, seq in self.W:
            if not seq:
                raise MalformedCharacteristic(f"W({format_scalar(lam)}) is empty")
        lams = [lam for lam, _ in self.W]
        if len(set(lams)) != len(lams):
            raise MalformedCharacteristic("repeated eigenvalue in W")

    # bookkeeping

    @property
    def dim_singular(self) -> int:
        return 2 * self.B[0] + sum(self.B[1:]) if self.B else 0

    def dim_jordan(self, lam) -> int:
        return sum(self.W_map.get(lam, ()))

    @property
    def dim_inf(self) -> int:
        return sum(self.A)

    @property
    def dim_shift(self) -> int:
        return sum(self.C)

    @property
    def graph_dim(self) -> int:
        return self.dim_singular + sum(sum(s) for _, s in self.W) + self.dim_inf + self.dim_shift

    @property
    def space_dim(self) -> int:
        """``dim(dom A + ran A)`` of any relation with this characteristic."""
        return sum(self.B) + sum(sum(s) for _, s in self.W) + sum(self.A) + self.C0 + sum(self.C)

    def to_json(self) -> dict:
        return {
            "B": list(self.B),
            "W": {format_scalar(lam): list(seq) for lam, seq in self.W},
            "A": list(self.A),
            "C": list(self.C),
            "C0_eq_C1": True,
        }

    @classmethod
    def from_json(cls, d: Mapping) -> "WeyrCharacteristic":
        if not isinstance(d, Mapping):
            raise MalformedCharacteristic("characteristic must be a JSON object")
        unknown = set(d) - {"B", "W", "A", "C", "C0_eq_C1"}
        if unknown:
            raise MalformedCharacteristic(f"unknown keys: {sorted(unknown)}")
        if d.get("C0_eq_C1", True) is not True:
            raise MalformedCharacteristic("C must satisfy C_0 = C_1")

        def seq(v, name):
            if not isinstance(v, list) or any(isinstance(a, bool) or not isinstance(a, int) for a in v):
                raise MalformedCharacteristic(f"{name} must be a list of integers")
            return tuple(v)

        W = d.get("W", {})
        if not isinstance(W, Mapping):
            raise MalformedCharacteristic("W must be an object keyed by eigenvalue")
        return cls.make(
            B=seq(d.get("B", []), "B"),
            W={parse_scalar(k): seq(v, f"W({k})") for k, v in W.items()},
            A=seq(d.get("A", []), "A"),
            C=seq(d.get("C", []), "C"),
        )

    def diff(self, other: "WeyrCharacteristic") -> str | None:
        """First differing entry, described in words; None when equal."""

        def first(name, a, b):
            for k in range(max(len(a), len(b))):
                x = a[k] if k < len(a) else 0
                y = b[k] if k < len(b) else 0
                if x != y:
                    return f"{name}_{k + 1}: {x} vs {y}"
            return None

        for name, a, b in (("B", self.B, other.B),):
            r = first(name, a, b)
            if r:
                return r
        wa, wb = self.W_map, other.W_map
        for lam in sorted(set(wa) | set(wb), key=sort_key):
            r = first(f"W({format_scalar(lam)})", wa.get(lam, ()), wb.get(lam, ()))
            if r:
                return r
        for name, a, b in (("A", self.A, other.A), ("C", self.C, other.C)):
            r = first(name, a, b)
            if r:
                return r
        return None


def weyr_characteristic(
    A: LinearRelation,
    field: str = RATIONAL,
    extra_eigs: Iterable = (),
    spectral: SpectralData | None = None,
) -> WeyrCharacteristic:
    sd = spectral or spectral_data(A, field, extra_eigs)
    if sd.unsplit_factors:
        raise UnsplitEigenvalues(sd.unsplit_factors)
    B = weyr_B(A, sd.R_c)
    W = {}
    for lam in sd.proper_eigs:
        s = weyr_W(A, lam, sd.R_c)
        assert s.total == sd.multiplicities[lam], "Weyr sum disagrees with algebraic multiplicity"
        W[lam] = s.entries
    Aseq = weyr_A(A, sd.R_c)
    C = weyr_C(A, sd.R_r)
    assert bool(Aseq.entries) == sd.has_inf_proper
    wc = WeyrCharacteristic.make(B.entries, W, Aseq.entries, C.entries)
    assert wc.graph_dim == A.dim, "dimension ledger does not add up"
    assert wc.space_dim == hull(A).dim
    return wc
