import random
from fractions import Fraction as Fr

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import e, synthesized, z
from relkit.decompose import decompose
from relkit.equiv import (
    PROFILES,
    apply_transform,
    compare,
    mat_inverse,
    random_characteristic,
    random_relation,
    random_transform,
    strictly_equivalent,
    synthesize,
)
from relkit.errors import DimMismatch, SingularTransform
from relkit.linalg import matmul, vec
from relkit.relation import LinearRelation, hull
from relkit.weyr import WeyrCharacteristic, weyr_characteristic

R = LinearRelation.from_pairs
WC = WeyrCharacteristic.make
JORDAN0 = R(2, [(e(0, 2), z(2)), (e(1, 2), e(0, 2))])


def test_apply_transform_examples():
    A = R(2, [(e(0, 2), z(2))])
    assert apply_transform(A, [[1, 0], [0, 1]]) == A
    assert apply_transform(A, [[0, 1], [1, 0]]) == R(2, [(e(1, 2), z(2))])
    assert apply_transform(JORDAN0, [[1, 1], [0, 1]]) == R(2, [(e(0, 2), z(2)), (vec(1, 1), e(0, 2))])
    with pytest.raises(SingularTransform):
        apply_transform(A, [[1, 1], [1, 1]])
    with pytest.raises(DimMismatch):
        apply_transform(A, [[1]])


def test_strict_equivalence_examples():
    I2 = LinearRelation.identity(2)
    J1 = R(2, [(e(0, 2), e(0, 2)), (e(1, 2), vec(1, 1))])
    res = compare(I2, J1)
    assert not res and res.difference == "W(1)_1: 2 vs 1"
    assert strictly_equivalent(LinearRelation.zero(2), LinearRelation.zero(2))
    assert strictly_equivalent(I2, apply_transform(I2, [[2, 1], [1, 1]]))


def test_synthesize_examples(example_relation):
    assert synthesize(WC(W={0: (1, 1)})) == JORDAN0
    assert synthesize(WC()) == LinearRelation.zero(0)
    S = synthesize(WC(B=(1, 1), A=(1,)))
    assert S.n == 3 and strictly_equivalent(S, example_relation)
    assert synthesize(WC(W={0: (1, 1)}), ambient=4).n == 4
    with pytest.raises(DimMismatch):
        synthesize(WC(W={0: (1, 1)}), ambient=1)


def test_random_transform_invertible():
    rng = random.Random(1)
    for n in range(1, 9):
        T = random_transform(n, rng)
        Ti = mat_inverse(T)
        assert matmul(T, Ti) == [[Fr(int(i == j)) for j in range(n)] for i in range(n)]


@pytest.mark.parametrize("profile", PROFILES)
def test_profiles_produce_their_families(profile):
    rng = random.Random(11)
    for _ in range(10):
        wc = random_characteristic(rng, 8, profile)
        assert wc.space_dim <= 8
        if profile == "singular":
            assert not (wc.W or wc.A or wc.C)
        if profile == "shift":
            assert not (wc.B or wc.W or wc.A)
        if profile == "regular":
            assert not (wc.B or wc.C)


def test_random_relation_is_seeded():
    a = random_relation(random.Random(42), 10)
    b = random_relation(random.Random(42), 10)
    assert a == b


@given(synthesized(), st.integers(0, 10**6))
def test_soundness(case, seed):
    A, _ = case
    T = random_transform(A.n, random.Random(seed))
    assert strictly_equivalent(A, apply_transform(A, T))


@given(st.integers(0, 10**6), st.integers(0, 10**6))
def test_separation(s1, s2):
    w1 = random_characteristic(random.Random(s1), 7)
    w2 = random_characteristic(random.Random(s2), 7)
    if w1 == w2:
        return
    res = compare(synthesize(w1), synthesize(w2))
    assert not res.equivalent and res.difference is not None


@given(st.integers(0, 10**6), st.sampled_from(PROFILES))
def test_round_trip(seed, profile):
    wc = random_characteristic(random.Random(seed), 10, profile)
    S = synthesize(wc)
    assert weyr_characteristic(S) == wc
    assert hull(S).dim == S.n == wc.space_dim


@given(st.integers(0, 10**6))
def test_component_dims_from_characteristic(seed):
    wc = random_characteristic(random.Random(seed), 10)
    D = decompose(synthesize(wc))
    assert D.singular.relation.dim == wc.dim_singular
    for lam, P in D.jordan:
        assert P.relation.dim == wc.dim_jordan(lam)
    assert D.jordan_inf.relation.dim == wc.dim_inf
    assert D.multishift.relation.dim == wc.dim_shift


def test_gaussian_synthesis():
    from relkit.field import gaussian

    wc = WC(W={gaussian(0, 1): (1,), gaussian(0, -1): (1,)})
    S = synthesize(wc)
    assert weyr_characteristic(S, "gaussian") == wc
