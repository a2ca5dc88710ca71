import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import e, z
from relkit.equiv import random_transform, strictly_equivalent
from relkit.errors import ShapeMismatch, UnsplitEigenvalues
from relkit.linalg import Subspace, column_space, matvec, rank, vec
from relkit.pencil import Pencil, kernel_rep, range_rep
from relkit.relation import LinearRelation, dom, mul
from relkit.weyr import weyr_characteristic

R = LinearRelation.from_pairs


def test_identity_E_gives_graph_of_F():
    P = Pencil.of([[1, 0], [0, 1]], [[1, 0], [0, 2]])
    G = LinearRelation.from_matrix([[1, 0], [0, 2]])
    assert kernel_rep(P) == G and range_rep(P) == G


def test_singular_E_range_rep():
    A = range_rep(Pencil.of([[1, 0], [0, 0]], [[1, 0], [0, 1]]))
    assert A == R(2, [(e(0, 2), e(0, 2)), (z(2), e(1, 2))])
    assert mul(A) == Subspace.span([e(1, 2)], 2)


def test_zero_E():
    P = Pencil.of([[0, 0], [0, 0]], [[1, 0], [0, 1]])
    K = kernel_rep(P)
    assert K == R(2, [(z(2), e(0, 2)), (z(2), e(1, 2))])
    assert range_rep(P) == R(2, [(z(2), e(0, 2)), (z(2), e(1, 2))])


def test_shape_mismatch():
    with pytest.raises(ShapeMismatch):
        Pencil.of([[1, 0]], [[1], [0]])


def test_rectangular():
    P = Pencil.of([[1, 0, 0], [0, 1, 0]], [[0, 1, 0], [0, 0, 1]])
    assert P.shape == (2, 3)
    assert kernel_rep(P).n == 3 and range_rep(P).n == 2


mats = lambda n, m: st.lists(st.lists(st.integers(-2, 2), min_size=m, max_size=m), min_size=n, max_size=n)


@given(st.integers(1, 4), st.integers(1, 4), st.data())
def test_representation_invariants(n, m, data):
    E, F = data.draw(mats(n, m)), data.draw(mats(n, m))
    P = Pencil.of(E, F)
    Rr = range_rep(P)
    assert Rr.dim == rank([list(r) for r in E] + [list(r) for r in F])
    K = kernel_rep(P)
    ranE = column_space(E, n)
    for x in dom(K).basis:
        assert matvec(F, x) in ranE
    for i in range(m):
        x = vec(*[int(i == j) for j in range(m)])
        assert (x in dom(K)) == (matvec(F, x) in ranE)


@given(st.integers(0, 10**6), st.integers(1, 5))
def test_invertible_E_reps_equivalent(seed, n):
    rng = random.Random(seed)
    E = random_transform(n, rng)
    F = [[rng.randint(-2, 2) for _ in range(n)] for _ in range(n)]
    P = Pencil.of(E, F)
    K, G = kernel_rep(P), range_rep(P)
    try:
        wk = weyr_characteristic(K)
    except UnsplitEigenvalues as ex:
        with pytest.raises(UnsplitEigenvalues) as ex2:
            weyr_characteristic(G)
        assert ex2.value.factors == ex.factors
        return
    assert weyr_characteristic(G) == wk
    assert strictly_equivalent(K, G)
