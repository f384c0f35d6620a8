from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from exsquares.exactmath import DomainError
from exsquares.polyfield import (HomogPoly, Poly, RatFunc, X, dehomogenize,
                                 homog_eval, homogenize, poly_gcd, poly_sqrt)

coeff = st.integers(min_value=-50, max_value=50)
polys = st.lists(coeff, min_size=1, max_size=6).map(Poly)
nonzero_polys = polys.filter(bool)


def test_construction_trims_trailing_zeros():
    assert Poly([1, 2, 0, 0]) == Poly([1, 2])
    assert Poly([0]).degree == -1
    assert not Poly([0])
    assert Poly([3, 0, 1]).degree == 2
    assert Poly([3, 0, 1]).lead == 1


def test_evaluation_and_arithmetic():
    p = (X + Poly([1])) * (X - Poly([2]))
    assert p(5) == 6 * 3
    assert p(Fraction(1, 2)) == Fraction(3, 2) * Fraction(-3, 2)
    assert p == X * X - X - Poly([2])


@given(polys, polys, polys)
@settings(max_examples=120)
def test_ring_axioms(a, b, c):
    assert a * (b + c) == a * b + a * c
    assert (a + b) * c == a * c + b * c
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a + (-a) == Poly([0])


@given(polys, nonzero_polys)
@settings(max_examples=120)
def test_divmod_invariant(a, b):
    q, r = divmod(a, b)
    assert q * b + r == a
    assert not r or r.degree < b.degree


def test_poly_gcd_terminates_at_common_factor():
    a = X ** 3 - X  # x(x-1)(x+1)
    b = X * X - Poly([1])
    g = poly_gcd(a, b)
    assert g == (X * X - Poly([1])).monic()


@given(nonzero_polys, nonzero_polys)
@settings(max_examples=120)
def test_poly_gcd_divides_both(a, b):
    g = poly_gcd(a, b)
    assert a % g == Poly([0])
    assert b % g == Poly([0])
    assert g.lead == 1


@given(nonzero_polys)
@settings(max_examples=120)
def test_poly_sqrt_inverts_squaring(p):
    r = poly_sqrt(p * p)
    assert r is not None
    assert r * r == p * p
    assert r.lead > 0


def test_poly_sqrt_rejects_non_squares():
    assert poly_sqrt(X * X + Poly([1])) is None
    assert poly_sqrt(X) is None


def test_primitive_content_split():
    p = Poly([Fraction(4, 3), Fraction(8, 3)])
    content, prim = p.primitive()
    assert content * prim == p
    assert all(c.denominator == 1 for c in prim.coeffs)
    assert prim.lead > 0


def test_ratfunc_field_arithmetic():
    f = RatFunc(Poly([1]), X)          # 1/x
    g = RatFunc(X, Poly([1]))          # x
    assert f * g == RatFunc(Poly([1]), Poly([1]))
    assert f + g == RatFunc(X * X + Poly([1]), X)
    h = f / g
    assert h(Fraction(3)) == Fraction(1, 9)


def test_ratfunc_normalizes_to_coprime_monic_denominator():
    f = RatFunc(2 * (X * X - Poly([1])), 4 * (X - Poly([1])))
    assert f == RatFunc(X + Poly([1]), Poly([2]))
    assert f.den.lead == 1


def test_homog_text_parse_round_trip():
    h = HomogPoly((1, -2, 0, 7))
    assert HomogPoly.parse(h.text()) == h
    assert h.text() == "(1, -2, 0, 7)"


@given(st.lists(coeff, min_size=1, max_size=7),
       st.integers(min_value=-9, max_value=9).filter(bool),
       st.integers(min_value=-20, max_value=20),
       st.integers(min_value=-20, max_value=20))
@settings(max_examples=150)
def test_homog_eval_is_homogeneous(cs, lam, u, v):
    h = HomogPoly(tuple(cs))
    d = len(cs) - 1
    assert homog_eval(h, lam * u, lam * v) == lam ** d * homog_eval(h, u, v)


def test_homog_round_trips_with_poly():
    h = HomogPoly((2, 0, -3, 5))
    p = dehomogenize(h)
    assert p == Poly([5, -3, 0, 2])
    assert homogenize(p, 3) == h
    for t in range(-4, 5):
        assert homog_eval(h, t, 1) == p(t)


def test_homogenize_rejects_degree_too_small():
    with pytest.raises(DomainError):
        homogenize(X ** 3, 2)
