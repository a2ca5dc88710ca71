"""Strict equivalence, basis changes and canonical synthesis."""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import DimMismatch, SingularTransform
from .field import RATIONAL, as_scalar, gaussian, sort_key
from .linalg import matvec, rref, unit, zero_vector
from .relation import LinearRelation
from .weyr import WeyrCharacteristic, conjugate_partition, weyr_characteristic

PROFILES = ("mixed", "singular", "jordan", "inf", "shift", "regular")


def _check_square(T: Sequence[Sequence], n: int):
    if len(T) != n or any(len(row) != n for row in T):
        raise DimMismatch(f"transform must be {n}x{n}")


def mat_inverse(T: Sequence[Sequence]) -> list[list]:
    n = len(T)
    _check_square(T, n)
    aug = [[as_scalar(a) for a in T[i]] + [Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    R, piv = rref(aug, 2 * n)
    if piv[:n] != list(range(n)) or len(piv) < n:
        raise SingularTransform("transform is not invertible")
    return [list(R[i][n:]) for i in range(n)]


def apply_transform(A: LinearRelation, T: Sequence[Sequence]) -> LinearRelation:
    """``T A T^{-1} = {(Tx, Ty) : (x, y) in A}``."""
    n = A.n
    _check_square(T, n)
    if n and len(rref(T, n)[1]) != n:
        raise SingularTransform("transform is not invertible")
    T = [[as_scalar(a) for a in row] for row in T]
    return LinearRelation.from_pairs(n, [(matvec(T, x), matvec(T, y)) for x, y in A.pairs()])


def random_transform(n: int, rng: random.Random, bound: int = 2) -> list[list]:
    """Unit lower times unit upper triangular with small integers, then a column permutation."""
    L = [[Fraction(1) if i == j else Fraction(rng.randint(-bound, bound)) if j < i else Fraction(0)
          for j in range(n)] for i in range(n)]
    U = [[Fraction(1) if i == j else Fraction(rng.randint(-bound, bound)) if j > i else Fraction(0)
          for j in range(n)] for i in range(n)]
    LU = [[sum((L[i][k] * U[k][j] for k in range(n)), Fraction(0)) for j in range(n)] for i in range(n)]
    perm = list(range(n))
    rng.shuffle(perm)
    return [[LU[i][perm[j]] for j in range(n)] for i in range(n)]


@dataclass(frozen=True)
class EquivalenceResult:
    equivalent: bool
    weyr_a: WeyrCharacteristic
    weyr_b: WeyrCharacteristic
    difference: str | None

    def __bool__(self):
        return self.equivalent


def compare(A: LinearRelation, B: LinearRelation, field: str = RATIONAL,
            extra_eigs: Iterable = ()) -> EquivalenceResult:
    extra = list(extra_eigs)
    wa = weyr_characteristic(A, field, extra)
    wb = weyr_characteristic(B, field, extra)
    return EquivalenceResult(wa == wb, wa, wb, wa.diff(wb))


def strictly_equivalent(A: LinearRelation, B: LinearRelation, field: str = RATIONAL) -> bool:
    return compare(A, B, field).equivalent


def synthesize(wc: WeyrCharacteristic, ambient: int | None = None) -> LinearRelation:
    """Canonical relation with characteristic ``wc`` on standard coordinates.

    Layout: singular chains, Jordan chains by increasing eigenvalue, chains
    at ∞, then shift chains; longer chains first within each group.  Extra
    ambient coordinates beyond ``dom + ran`` stay unused.
    """
    wc.validate()
    n = wc.space_dim if ambient is None else ambient
    if n < wc.space_dim:
        raise DimMismatch(f"ambient dimension {n} is below {wc.space_dim}")
    z = zero_vector(n)
    e = lambda i: unit(i, n)
    pairs = []
    c = 0

    def take(k):
        nonlocal c
        out = [e(c + j) for j in range(k)]
        c += k
        return out

    for k in conjugate_partition(wc.B):
        x = take(k)
        pairs.append((z, x[-1]))
        pairs += [(x[j], x[j - 1]) for j in range(k - 1, 0, -1)]
        pairs.append((x[0], z))
    for lam, seq in wc.W:
        for k in conjugate_partition(seq):
            x = take(k)
            pairs.append((x[0], tuple(lam * a for a in x[0])))
            pairs += [(x[j], tuple(a + lam * b for a, b in zip(x[j - 1], x[j]))) for j in range(1, k)]
    for k in conjugate_partition(wc.A):
        x = take(k)
        pairs.append((z, x[0]))
        pairs += [(x[j - 1], x[j]) for j in range(1, k)]
    for p in conjugate_partition(wc.C):
        x = take(p + 1)
        pairs += [(x[j - 1], x[j]) for j in range(1, p + 1)]
    return LinearRelation.from_pairs(n, pairs)


def characteristic_from_lengths(singular=(), jordan=None, inf=(), shift=()) -> WeyrCharacteristic:
    """Weyr characteristic of a chain layout given by chain lengths."""
    jordan = jordan or {}
    return WeyrCharacteristic.make(
        B=conjugate_partition(sorted(singular, reverse=True)),
        W={lam: conjugate_partition(sorted(ls, reverse=True)) for lam, ls in jordan.items() if ls},
        A=conjugate_partition(sorted(inf, reverse=True)),
        C=conjugate_partition(sorted(shift, reverse=True)),
    )


_EIG_POOL = [Fraction(v) for v in (-2, -1, 0, 1, 2, 3)] + [Fraction(1, 2), Fraction(-3, 2)]


def random_characteristic(rng: random.Random, max_dim: int = 10, profile: str = "mixed",
                          field: str = RATIONAL) -> WeyrCharacteristic:
    """Random valid characteristic with ``space_dim <= max_dim``."""
    if profile not in PROFILES:
        raise ValueError(f"unknown profile {profile!r}")
    kinds = {
        "mixed": ("singular", "jordan", "jordan", "inf", "shift"),
        "regular": ("jordan", "jordan", "inf"),
    }.get(profile, (profile,))
    pool = list(_EIG_POOL)
    if field != RATIONAL:
        pool += [gaussian(0, 1), gaussian(0, -1), gaussian(1, 1), gaussian(Fraction(1, 2), -2)]
    budget = rng.randint(0, max_dim)
    sing, inf, sh = [], [], []
    jor: dict = {}
    eigs = rng.sample(pool, k=min(len(pool), rng.randint(1, 3)))
    while budget > 0:
        kind = rng.choice(kinds)
        if kind == "shift":
            if budget < 2:
                break
            p = rng.randint(1, min(3, budget - 1))
            sh.append(p)
            budget -= p + 1
            continue
        k = rng.randint(1, min(3, budget))
        budget -= k
        if kind == "singular":
            sing.append(k)
        elif kind == "inf":
            inf.append(k)
        else:
            jor.setdefault(rng.choice(eigs), []).append(k)
    jor = dict(sorted(jor.items(), key=lambda p: sort_key(p[0])))
    return characteristic_from_lengths(sing, jor, inf, sh)


def random_relation(rng: random.Random, max_dim: int = 10, profile: str = "mixed",
                    field: str = RATIONAL, pad: bool = True):
    """``(A, wc)``: a synthesized relation under a random basis change, plus its characteristic."""
    wc = random_characteristic(rng, max_dim, profile, field)
    n = wc.space_dim
    if pad and n < max_dim:
        n += rng.randint(0, min(2, max_dim - n))
    A = synthesize(wc, n)
    return apply_transform(A, random_transform(n, rng)), wc
