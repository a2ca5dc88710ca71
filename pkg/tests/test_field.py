from fractions import Fraction as Fr

import pytest
from hypothesis import given
from hypothesis import strategies as st

from relkit.errors import DivisionByZero, ParseError, ZeroPolynomial
from relkit.field import (
    GaussianRational,
    Poly,
    charpoly,
    format_poly,
    format_scalar,
    full_rank_everywhere,
    function_field_pivots,
    gaussian,
    inv,
    linear_pencil,
    parse_scalar,
    poly_gaussian_roots,
    poly_rational_roots,
)
from relkit.linalg import rank

fracs = st.fractions(min_value=-20, max_value=20, max_denominator=12)
gauss = st.builds(gaussian, fracs, fracs)
lam = Poly([0, 1])


def test_scalar_basics():
    assert Fr(1, 2) + Fr(1, 3) == Fr(5, 6)
    assert Fr(2, 4) == Fr(1, 2) and Fr(2, 4).denominator == 2
    assert inv(Fr(3, 7)) == Fr(7, 3)
    with pytest.raises(DivisionByZero):
        inv(Fr(0))
    with pytest.raises(ZeroDivisionError):
        inv(gaussian(0, 0))


@given(gauss, gauss, gauss)
def test_gaussian_field_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    if b != 0:
        assert (a / b) * b == a


def test_gaussian_collapses_to_rational():
    assert gaussian(3, 0) == Fr(3)
    assert type(gaussian(3, 0)) is Fr
    i = gaussian(0, 1)
    assert i * i == -1
    assert type(i * i) in (Fr, GaussianRational)


@pytest.mark.parametrize("text,value", [
    ("5/6", Fr(5, 6)), ("-3", Fr(-3)), ("i", gaussian(0, 1)), ("-2i", gaussian(0, -2)),
    ("1/2+3/4i", gaussian(Fr(1, 2), Fr(3, 4))), ("1-i", gaussian(1, -1)),
])
def test_parse_scalar(text, value):
    assert parse_scalar(text) == value
    assert parse_scalar(format_scalar(value)) == value


@pytest.mark.parametrize("bad", ["", "abc", "1/0", "1//2", "2i3"])
def test_parse_scalar_rejects(bad):
    with pytest.raises(ParseError):
        parse_scalar(bad)


def test_format_scalar():
    assert format_scalar(Fr(5, 1)) == "5"
    assert format_scalar(Fr(-1, 3)) == "-1/3"


def test_rational_roots_examples():
    assert poly_rational_roots(lam * lam - 3 * lam + 2) == ([(Fr(1), 1), (Fr(2), 1)], [])
    roots, rest = poly_rational_roots(lam * lam + 1)
    assert roots == [] and rest == [lam * lam + 1]
    # lambda^2 (lambda - 1) expands to lambda^3 - lambda^2
    assert poly_rational_roots(Poly([0, 0, -1, 1])) == ([(Fr(0), 2), (Fr(1), 1)], [])
    with pytest.raises(ZeroPolynomial):
        poly_rational_roots(Poly())


@given(st.lists(st.fractions(min_value=-6, max_value=6, max_denominator=4), min_size=1, max_size=4),
       st.sampled_from([Poly([1]), Poly([1, 0, 1]), Poly([-2, 0, 1])]))
def test_rational_roots_recovered(roots, extra):
    p = extra
    for r in roots:
        p = p * Poly([-r, 1])
    found, rest = poly_rational_roots(p * Fr(3, 5))
    mult = {}
    for r in roots:
        mult[r] = mult.get(r, 0) + 1
    assert dict(found) == mult
    for r, _ in found:
        assert p(r) == 0
    assert [f.degree for f in rest] == ([2] if extra.degree == 2 else [])


def test_gaussian_roots():
    roots, rest = poly_gaussian_roots(lam * lam + 1)
    assert sorted(r for r, _ in roots) if False else {r for r, _ in roots} == {gaussian(0, 1), gaussian(0, -1)}
    assert rest == []
    p = (lam - gaussian(Fr(1, 2), 2)) * (lam - 3) * (lam * lam - 2)
    roots, rest = poly_gaussian_roots(p)
    assert {r for r, _ in roots} == {gaussian(Fr(1, 2), 2), Fr(3)}
    assert len(rest) == 1 and rest[0].degree == 2


def test_poly_division_and_gcd():
    a = (lam - 1) * (lam + 2) ** 2
    q, r = a.divmod(lam + 2)
    assert r.is_zero() and q == (lam - 1) * (lam + 2)
    assert format_poly(lam * lam + 1) == "λ^2 + 1"


def test_function_field_pivots_examples():
    assert function_field_pivots([[lam]]) == (1, [lam])
    rank_, piv = function_field_pivots([[Poly([1]), Poly()], [Poly(), lam - 2]])
    assert rank_ == 2 and piv[-1] == lam - 2
    rank_, piv = function_field_pivots([[lam, Poly([1])], [lam * lam, lam]])
    assert rank_ == 1
    # rank of the evaluated matrix at sampled points agrees where no pivot vanishes
    M = [[lambda t: t, lambda t: 1], [lambda t: t * t, lambda t: t]]
    for t0 in (0, 1, 3):
        assert rank([[f(Fr(t0)) for f in row] for row in M]) == 1


@given(st.lists(st.lists(st.lists(st.integers(-2, 2), min_size=2, max_size=2), min_size=3, max_size=3),
                min_size=3, max_size=3))
def test_generic_rank_off_pivot_roots(entries):
    M = [[Poly(c) for c in row] for row in entries]
    r, piv = function_field_pivots(M)
    samples = 0
    t0 = Fr(-7)
    while samples < 5:
        t0 += Fr(5, 3)
        if any(p(t0) == 0 for p in piv):
            continue
        assert rank([[e(t0) for e in row] for row in M]) == r
        samples += 1


def test_charpoly():
    assert charpoly([[0, -1], [1, 0]]) == lam * lam + 1
    assert charpoly([[2, 1], [0, 2]]) == (lam - 2) ** 2
    assert charpoly([]) == Poly([1])


def test_full_rank_everywhere():
    # shift chain x0 -> x1 -> x2: Y - tX never loses column rank
    X = [[1, 0], [0, 1], [0, 0]]
    Y = [[0, 0], [1, 0], [0, 1]]
    assert full_rank_everywhere(linear_pencil(Y, X))
    # identity: rank drops at t = 1
    assert not full_rank_everywhere(linear_pencil([[1]], [[1]]))
