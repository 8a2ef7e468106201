from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import oracle_boxplus, permutation_average, poly_pairs, rat_polys, small_rats
from freeconv.errors import DegreeExceedsAmbient, ZeroPolynomial
from freeconv.poly import (
    RatPoly,
    apply_U_alpha,
    boxplus,
    derivative,
    from_roots,
    scale_arg,
    shift,
    squarefree_decomposition,
    squarefree_part,
    u_alpha,
)

X2M1 = RatPoly([-1, 0, 1])


def test_from_roots_examples():
    assert from_roots([]) == RatPoly([1])
    assert from_roots([1, -1]) == X2M1
    assert from_roots([2, 0, 0]) == RatPoly([0, 0, -2, 1])
    assert from_roots([2, 0, 0]).n == 3


def test_derivative_examples():
    assert derivative(X2M1, 1) == RatPoly([0, 2])
    assert derivative(RatPoly([0, 0, 0, 1]), 3) == RatPoly([6])
    assert derivative(X2M1, 3).is_zero()
    assert derivative(X2M1.with_ambient(2), 3).n == 0


def test_shift_and_scale_examples():
    assert shift(RatPoly([0, 0, 1]), 1) == RatPoly([1, 2, 1])
    assert scale_arg(X2M1, 2) == RatPoly([-1, 0, 4])
    assert shift(X2M1, 0) == X2M1


def test_boxplus_examples():
    a, b = Fraction(3, 2), Fraction(-2)
    assert boxplus(from_roots([a]), from_roots([b]), 1) == from_roots([a + b])
    assert boxplus(X2M1, X2M1, 2) == RatPoly([-2, 0, 1])
    p = RatPoly([5, -1, 3])
    assert boxplus(RatPoly([0, 0, 0, 1]), p, 3) == p


def test_boxplus_rejects_large_degree():
    with pytest.raises(DegreeExceedsAmbient):
        boxplus(RatPoly([0, 0, 0, 1]), X2M1, 2)


def test_boxplus_zero_polynomial():
    assert boxplus(RatPoly([]), X2M1, 2).is_zero()


def test_u_alpha_examples():
    assert u_alpha(2, 1) == RatPoly([0, -2, 1])
    assert u_alpha(3, Fraction(1, 3)) == RatPoly([0, 0, -1, 1])
    assert u_alpha(1, 5) == RatPoly([-5, 1])


def test_apply_U_alpha_examples():
    assert apply_U_alpha(RatPoly([0, 0, 1]), 1) == RatPoly([0, -2, 1])
    assert apply_U_alpha(X2M1, 0) == X2M1
    assert apply_U_alpha(X2M1, Fraction(1, 2)) == RatPoly([-1, -1, 1])


def test_squarefree_part_examples():
    assert squarefree_part(RatPoly([0, 0, 1])) == RatPoly([0, 1])
    assert squarefree_part(from_roots([1, 1, 2])) == from_roots([1, 2])
    assert squarefree_part(X2M1) == X2M1
    with pytest.raises(ZeroPolynomial):
        squarefree_part(RatPoly([]))


def test_squarefree_decomposition_multiplicities():
    p = from_roots([1, 1, 1, 2, 2, 5])
    parts = {m: f.monic() for f, m in squarefree_decomposition(p)}
    assert parts == {1: from_roots([5]), 2: from_roots([2]), 3: from_roots([1])}


def test_json_round_trip():
    p = RatPoly([Fraction(1, 3), 0, -2], 4)
    obj = p.to_json()
    assert obj == {"n": 4, "coeffs": ["1/3", "0/1", "-2/1"]}
    assert RatPoly.from_json(obj) == p and RatPoly.from_json(obj).n == 4


@settings(max_examples=1000, deadline=None)
@given(poly_pairs())
def test_boxplus_matches_coefficient_oracle(pq):
    p, q, n = pq
    assert boxplus(p, q, n) == oracle_boxplus(p, q, n)


@settings(max_examples=200, deadline=None)
@given(st.lists(small_rats, min_size=1, max_size=4), st.data())
def test_boxplus_is_permutation_average(ra, data):
    rb = data.draw(st.lists(small_rats, min_size=len(ra), max_size=len(ra)))
    n = len(ra)
    assert boxplus(from_roots(ra), from_roots(rb), n) == permutation_average(ra, rb)


@settings(max_examples=1000, deadline=None)
@given(poly_pairs(), small_rats)
def test_boxplus_symmetry_and_shift(pq, a):
    p, q, n = pq
    assert boxplus(p, q, n) == boxplus(q, p, n)
    assert boxplus(shift(p, a), q, n) == shift(boxplus(p, q, n), a)


@settings(max_examples=1000, deadline=None)
@given(poly_pairs(), small_rats.filter(lambda a: a != 0))
def test_boxplus_scale_invariance(pq, a):
    p, q, n = pq
    assert boxplus(scale_arg(p, a), scale_arg(q, a), n) == scale_arg(boxplus(p, q, n), a) * a**n


@settings(max_examples=1000, deadline=None)
@given(poly_pairs())
def test_boxplus_derivative_invariance(pq):
    p, q, n = pq
    assert boxplus(derivative(p, 1), q, n) == derivative(boxplus(p, q, n), 1)


@settings(max_examples=1000, deadline=None)
@given(poly_pairs(), st.data())
def test_boxplus_bilinear(pq, data):
    p, q, n = pq
    d = data.draw(st.integers(min_value=0, max_value=n))
    p2 = RatPoly(data.draw(st.lists(small_rats, min_size=d + 1, max_size=d + 1)), n)
    assert boxplus(p + p2, q, n) == boxplus(p, q, n) + boxplus(p2, q, n)


@settings(max_examples=1000, deadline=None)
@given(rat_polys(min_deg=1), small_rats)
def test_U_alpha_is_convolution_with_u_alpha(p, alpha):
    n = p.degree
    assert apply_U_alpha(p, alpha) == boxplus(p, u_alpha(n, alpha), n)


@settings(max_examples=1000, deadline=None)
@given(rat_polys())
def test_xn_is_identity(p):
    assert boxplus(RatPoly.monomial(p.n, 1, p.n), p, p.n) == p


@settings(max_examples=300, deadline=None)
@given(rat_polys(min_deg=1))
def test_squarefree_part_divides_and_is_squarefree(p):
    s = squarefree_part(p)
    assert (p % s).is_zero()
    assert squarefree_part(s) == s
