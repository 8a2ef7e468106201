from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import real_rooted, small_rats
from freeconv.errors import DegreeMismatch, DegreeZero, EndpointIsRoot, NonpositiveOmega, NotRealRooted
from freeconv.poly import RatPoly, apply_U_alpha, boxplus, from_roots, u_alpha
from freeconv.roots import (
    DEFAULT_EPS,
    LinExpr,
    RealAlgebraic,
    Trilean,
    cauchy_inverse,
    certify_eq,
    certify_le,
    compare,
    interlaces,
    is_real_rooted,
    maxroot,
    padded_root_vector,
    real_roots,
    root_vector,
    sturm_count,
    top_root,
)

X2M1 = RatPoly([-1, 0, 1])
X2M2 = RatPoly([-2, 0, 1])


def test_sturm_count_examples():
    assert sturm_count(X2M1, -2, 2) == 2
    assert sturm_count(RatPoly([1, 0, 1]), -10, 10) == 0
    assert sturm_count(X2M1, 0, 2) == 1
    with pytest.raises(EndpointIsRoot):
        sturm_count(X2M1, 1, 2)


def test_is_real_rooted_examples():
    assert is_real_rooted(X2M1)
    assert not is_real_rooted(RatPoly([1, 0, 1]))
    assert is_real_rooted(from_roots([1, 1, 1, -2]))


def test_root_vector_sqrt2():
    rv = root_vector(X2M2, Fraction(1, 1000))
    assert rv.width <= Fraction(1, 1000)
    hi, lo = rv[0], rv[1]
    assert hi.lo <= Fraction(14142, 10000) <= hi.hi and hi.lo ** 2 <= 2 <= hi.hi ** 2
    assert lo.hi <= -Fraction(14142, 10000) + Fraction(1, 1000) and (hi.multiplicity, lo.multiplicity) == (1, 1)


def test_root_vector_exact_points():
    rv = root_vector(from_roots([1, 1]))
    assert [(e.lo, e.hi, e.multiplicity) for e in rv] == [(1, 1, 2), (1, 1, 2)]
    rv = root_vector(RatPoly([0, 0, -2, 1]))
    assert [e.lo for e in rv] == [2, 0, 0] and all(e.is_exact for e in rv)
    assert rv.to_json()[0] == {"lo": "2/1", "hi": "2/1", "mult": 1}


def test_root_vector_rejects_complex():
    with pytest.raises(NotRealRooted):
        root_vector(RatPoly([1, 0, 1]))


def test_padded_root_vector_examples():
    assert [e.lo for e in padded_root_vector(from_roots([3]), 2)] == [3, 3]
    assert [e.lo for e in padded_root_vector(X2M1, 2)] == [1, -1]
    assert [e.lo for e in padded_root_vector(RatPoly([-4, 0, 1]), 4)] == [2, 0, 0, -2]
    with pytest.raises(DegreeZero):
        padded_root_vector(RatPoly([3]), 2)


def test_maxroot_examples():
    m = maxroot(u_alpha(2, 1))
    assert m.lo == m.hi == 2
    m = maxroot(X2M2)
    assert m.lo ** 2 <= 2 <= m.hi ** 2 and m.width <= DEFAULT_EPS
    m = maxroot(from_roots([-5, -5, -5]))
    assert m.lo == m.hi == -5


def test_interlaces_examples():
    assert interlaces(RatPoly([0, 2]), X2M1).is_true
    assert interlaces(from_roots([5]), X2M1).is_false
    assert interlaces(from_roots([Fraction(7, 3)]), from_roots([Fraction(7, 3)] * 2)).is_true
    with pytest.raises(DegreeMismatch):
        interlaces(RatPoly([1]), X2M1)


def test_cauchy_inverse_examples():
    c = cauchy_inverse(RatPoly([0, 0, 1]), 1)
    assert c.lo == c.hi == 2
    c = cauchy_inverse(RatPoly([0, 0, 1]), Fraction(1, 3))
    assert c.lo == c.hi == 6 == maxroot(RatPoly([0, -6, 1])).lo
    c = cauchy_inverse(from_roots([Fraction(2, 3)]), Fraction(5, 7))
    assert c.lo == c.hi == Fraction(2, 3) + Fraction(7, 5)
    with pytest.raises(NonpositiveOmega):
        cauchy_inverse(X2M1, 0)


def test_trilean_json_and_truthiness():
    assert Trilean(True).to_json() == "true"
    ind = Trilean.indeterminate(Fraction(1, 8))
    assert ind.to_json() == {"indeterminate": "1/8"}
    assert Trilean.from_json(ind.to_json()) == ind
    with pytest.raises(TypeError):
        bool(ind)


def test_symbolic_cancellation_of_shifted_roots():
    # sqrt(2) + 1 and the root of the shifted polynomial are the same number
    a = top_root(X2M2)
    b = top_root(RatPoly([-1, -2, 1]))  # roots 1 +- sqrt(2)
    assert certify_eq(LinExpr.of(a) + 1, b).is_true
    assert compare(RealAlgebraic.rational(Fraction(14142, 10000)), a) < 0


def test_equal_values_with_different_keys():
    # sqrt(2) as a root of x^2 - 2 and of the irreducible-looking product (x^2 - 2)(x^2 - 3)
    a = top_root(X2M2)
    b = real_roots(RatPoly([6, 0, -5, 0, 1]))[1]
    assert certify_eq(a, b).is_true


@settings(max_examples=300, deadline=None)
@given(st.lists(small_rats, min_size=1, max_size=6))
def test_root_vector_recovers_rational_roots(roots):
    rv = root_vector(from_roots(roots))
    assert [e.lo for e in rv] == sorted(roots, reverse=True)
    assert all(e.is_exact for e in rv)


@settings(max_examples=200, deadline=None)
@given(st.integers(min_value=1, max_value=5).flatmap(lambda n: st.tuples(real_rooted(n=n), real_rooted(n=n))))
def test_enclosures_bracket_float_roots(pq):
    p, q = pq
    pq = boxplus(p, q, p.n)
    rv = root_vector(pq, Fraction(1, 2**20))
    approx = np.sort(np.real(np.roots([float(c) for c in reversed(pq.coeffs)])))[::-1]
    for e, x in zip(rv, approx):
        assert float(e.lo) - 1e-3 <= x <= float(e.hi) + 1e-3
    for e in rv:
        if e.multiplicity % 2 == 1 and not e.is_exact:
            assert (pq(e.lo) > 0) != (pq(e.hi) > 0)


@settings(max_examples=1000, deadline=None)
@given(st.integers(min_value=1, max_value=6).flatmap(lambda n: st.tuples(real_rooted(n=n), real_rooted(n=n))))
def test_convolution_preserves_real_roots(pq):
    p, q = pq
    assert is_real_rooted(boxplus(p, q, p.n))


@settings(max_examples=200, deadline=None)
@given(st.integers(min_value=1, max_value=5).flatmap(lambda n: st.tuples(real_rooted(n=n), real_rooted(n=n))))
def test_triangle_inequality_certified(pq):
    p, q = pq
    n = p.n
    v = certify_le(top_root(boxplus(p, q, n)), LinExpr.of(top_root(p)) + top_root(q))
    assert not v.is_false


@settings(max_examples=200, deadline=None)
@given(st.integers(min_value=2, max_value=5).flatmap(
    lambda n: st.tuples(real_rooted(n=n), real_rooted(n=n), st.just(n))))
def test_interlacing_is_preserved(data):
    p, r, n = data
    from freeconv.poly import derivative
    q = derivative(p, 1)
    assert interlaces(q, p).is_true
    v = interlaces(boxplus(q.with_ambient(n), r, n), boxplus(p, r, n))
    assert not v.is_false


@settings(max_examples=200, deadline=None)
@given(real_rooted(max_n=5), st.integers(min_value=1, max_value=12), st.integers(min_value=1, max_value=5))
def test_cauchy_inverse_agrees_with_U_alpha(p, a, b):
    alpha = Fraction(a, b)
    k = cauchy_inverse(p, 1 / alpha, Fraction(1, 2**30))
    top = top_root(apply_U_alpha(p, alpha))
    ev = top.exact_value()
    if ev is not None:
        assert k.lo == k.hi == ev
    else:
        lo, hi = top.enclosure(Fraction(1, 2**30))
        assert k.lo <= hi and lo <= k.hi


@settings(max_examples=100, deadline=None)
@given(real_rooted(max_n=4), real_rooted(max_n=4))
def test_refinement_never_flips(p, q):
    a, b = top_root(p), LinExpr.of(top_root(q)) + Fraction(1, 3)
    seen = {certify_le(a, b, Fraction(1, 2**k)).value for k in (4, 12, 40)}
    assert not {True, False} <= seen
