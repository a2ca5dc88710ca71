from fractions import Fraction as Fr

import pytest
from hypothesis import given
from hypothesis import strategies as st

from relkit.errors import AmbientMismatch, NotASubspace, NotInSpan
from relkit.linalg import (
    CoordinateMap,
    Subspace,
    column_space,
    complete_basis,
    coords,
    extend_modulo,
    intersect,
    kernel,
    matvec,
    member,
    quotient_dim,
    rank,
    span_sum,
    unit,
    vec,
)


def S(n, *vecs):
    return Subspace.span([vec(*v) for v in vecs], n)


@st.composite
def subspaces(draw, n=None, max_n=6):
    n = n if n is not None else draw(st.integers(1, max_n))
    k = draw(st.integers(0, n + 1))
    rows = draw(st.lists(st.lists(st.integers(-3, 3), min_size=n, max_size=n), min_size=k, max_size=k))
    return Subspace.span([vec(*r) for r in rows], n)


@st.composite
def subspace_pairs(draw, count=2):
    n = draw(st.integers(1, 7))
    return [draw(subspaces(n)) for _ in range(count)]


def test_column_space_examples():
    assert column_space([[1, 2], [0, 0]]) == S(2, (1, 0))
    assert column_space([[1, 2], [0, 0]]).dim == 1
    assert column_space([[0, 0], [0, 0]]).dim == 0
    assert column_space([[1, 1], [1, -1]]) == Subspace.full(2)


def test_kernel_examples():
    assert kernel([[1, 0], [0, 1]]).dim == 0
    assert kernel([[1, 1]]) == S(2, (1, -1))
    assert kernel([[1, 2], [2, 4]]) == S(2, (2, -1))


def test_sum_and_intersection_examples():
    e1, e2 = S(2, (1, 0)), S(2, (0, 1))
    assert span_sum(e1, e2) == Subspace.full(2)
    assert intersect(e1, e2).dim == 0
    assert span_sum(e1, e1) == intersect(e1, e1) == e1
    U, V = S(3, (1, 1, 0)), S(3, (1, 1, 0), (0, 0, 1))
    assert intersect(U, V) == U


def test_quotient_dim_examples():
    assert quotient_dim(Subspace.full(3), S(3, (1, 0, 0))) == 2
    assert quotient_dim(S(3, (1, 0, 0)), S(3, (1, 0, 0))) == 0
    assert quotient_dim(S(2, (1, 0), (0, 1)), S(2, (1, 1))) == 1
    with pytest.raises(NotASubspace):
        quotient_dim(S(2, (1, 0)), S(2, (0, 1)))


def test_complete_basis_examples():
    assert complete_basis(Subspace.zero(2), S(2, (0, 1))) == [vec(0, 1)]
    U = S(2, (1, 2))
    assert complete_basis(U, U) == []
    assert complete_basis(S(2, (1, 0)), Subspace.full(2)) == [unit(1, 2)]


def test_membership_and_coords():
    U = S(3, (1, 0, 0), (0, 1, 0))
    assert member(unit(0, 3), U)
    assert not member(unit(2, 3), U)
    assert coords(vec(3, 3), [vec(1, 1)]) == (Fr(3),)
    with pytest.raises(NotInSpan):
        coords(vec(1, 0), [vec(1, 1)])


def test_ambient_mismatch():
    with pytest.raises(AmbientMismatch):
        span_sum(Subspace.full(2), Subspace.full(3))
    with pytest.raises(AmbientMismatch):
        Subspace.span([vec(1, 2)], 3)


@given(subspaces())
def test_canonical_form_is_a_fixed_point(U):
    assert Subspace.span(U.basis, U.ambient_dim) == U
    assert column_space([list(r) for r in zip(*U.basis)], U.ambient_dim) == U if U.basis else True
    piv = U.pivots
    assert piv == sorted(set(piv))
    for i, v in enumerate(U.basis):
        assert v[piv[i]] == 1
        assert all(w[piv[i]] == 0 for j, w in enumerate(U.basis) if j != i)


@given(subspace_pairs(3))
def test_modular_law(spaces):
    U, V, Y = spaces
    X = U + Y  # U inside X
    assert U + (V & X) == (U + V) & X


@given(subspace_pairs(2))
def test_dimension_formula(spaces):
    U, V = spaces
    assert U.dim + V.dim == (U + V).dim + (U & V).dim
    assert U & V <= U <= U + V


@given(st.integers(1, 6), st.integers(1, 6), st.data())
def test_rank_nullity(m, n, data):
    M = data.draw(st.lists(st.lists(st.integers(-3, 3), min_size=n, max_size=n), min_size=m, max_size=m))
    K = kernel(M, n)
    assert rank(M) + K.dim == n
    for v in K.basis:
        assert all(a == 0 for a in matvec(M, v))


@given(subspace_pairs(2))
def test_complete_basis_completes(spaces):
    W, U = spaces
    W = W & U
    extra = complete_basis(W, U)
    assert len(extra) == quotient_dim(U, W)
    assert Subspace.span(list(W.basis) + extra, U.ambient_dim) == U
    assert all(v in U.basis for v in extra)


@given(subspaces(), st.data())
def test_coordinate_map_matches_coords(U, data):
    if U.dim == 0:
        return
    c = data.draw(st.lists(st.integers(-4, 4), min_size=U.dim, max_size=U.dim))
    x = tuple(sum((Fr(ci) * v[j] for ci, v in zip(c, U.basis)), Fr(0)) for j in range(U.ambient_dim))
    cm = CoordinateMap(U.basis, U.ambient_dim)
    assert cm(x) == tuple(Fr(a) for a in c) == coords(x, U.basis)


def test_extend_modulo_limit():
    kept = extend_modulo(Subspace.zero(3), [unit(0, 3), unit(0, 3), unit(1, 3), unit(2, 3)], limit=2)
    assert kept == [unit(0, 3), unit(1, 3)]
