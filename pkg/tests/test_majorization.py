import itertools
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import small_rats
from freeconv.errors import CrossingPinch, IndexOutOfRange, LengthMismatch, UnsupportedSize
from freeconv.majorization import (
    IndexTuple,
    charpoly,
    exact_eigenvalues,
    hermitian_falsify,
    horn_triples,
    is_horn_triple,
    majorizes,
    pinch,
    verify_matrix_triple,
)
from freeconv.poly import RatPoly
from freeconv.roots import root_vector


def test_majorizes_examples():
    assert majorizes([2, 0], [1, 1]).is_true
    rv = root_vector(RatPoly([-2, 0, 1]), Fraction(1, 1000))
    assert majorizes([2, -2], list(rv)).is_true
    assert majorizes([2, -2], rv.values).is_true
    assert majorizes([1, 0], [2, -1]).is_false
    with pytest.raises(LengthMismatch):
        majorizes([1], [1, 2])


def test_majorizes_requires_equal_totals():
    assert majorizes([3, 0], [1, 1]).is_false


def test_pinch_examples():
    assert pinch((3, 1), 1, 2, 1) == (2, 2)
    assert pinch((3, 1), 1, 2, 0) == (3, 1)
    out = pinch((5, 1, 0), 1, 3, 1)
    assert out == (4, 1, 1)
    assert majorizes((5, 1, 0), out).is_true
    with pytest.raises(CrossingPinch):
        pinch((3, 1), 1, 2, 2)


def test_index_tuple_json():
    t = IndexTuple(3, (1,), (2,), (1,), (1,))
    assert t.to_json() == {"n": 3, "I": [1], "L": [1], "J": [2], "K": [1]}
    assert IndexTuple.from_json(t.to_json()) == t
    with pytest.raises(IndexOutOfRange):
        IndexTuple(2, (3,), (1,), (1,))


def _weyl(n):
    return {(i, j, k) for i in range(1, n + 1) for j in range(1, n + 1) for k in range(1, n + 1)
            if i >= j + k - 1}


def test_horn_n2():
    got = {tuple(s[0] for s in t.triple) for t in horn_triples(2, 1)}
    assert got == {(1, 1, 1), (2, 1, 1), (2, 1, 2), (2, 2, 1)} == _weyl(2)
    assert {t.triple for t in horn_triples(2, 2)} == {((1, 2), (1, 2), (1, 2))}


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_horn_r1_is_weyl(n):
    got = {tuple(s[0] for s in t.triple) for t in horn_triples(n, 1)}
    assert got == _weyl(n)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_horn_full_size_is_trace(n):
    full = tuple(range(1, n + 1))
    assert {t.triple for t in horn_triples(n, n)} == {(full, full, full)}


def test_horn_unsupported():
    with pytest.raises(UnsupportedSize):
        horn_triples(7, 1)


def test_horn_counts_grow():
    assert [len(horn_triples(4, r)) for r in range(1, 5)] == [20, 50, 20, 1]


def test_charpoly_and_eigenvalues():
    m = [[2, 1, 0], [1, 3, 1], [0, 1, 4]]
    p = charpoly(m)
    np_coeffs = np.poly(np.array(m, dtype=float))[::-1]
    assert np.allclose([float(c) for c in p.coeffs], np_coeffs)
    ev = exact_eigenvalues([[2, 0], [0, -1]])
    assert [v.exact_value() for v in ev] == [2, -1]


def test_hermitian_falsify_examples():
    hit = hermitian_falsify(IndexTuple(2, (1,), (1,), (2,)), 10_000, seed=0)
    assert hit is not None
    a, b = hit
    assert verify_matrix_triple(IndexTuple(2, (1,), (1,), (2,)), a, b).is_false
    assert hermitian_falsify(IndexTuple(2, (2,), (1,), (1,)), 10_000, seed=0) is None


def test_hermitian_falsify_deterministic():
    t = IndexTuple(3, (1,), (2,), (2,))
    assert hermitian_falsify(t, 3000, seed=5) == hermitian_falsify(t, 3000, seed=5)


@pytest.mark.parametrize("n", [2, 3])
def test_sampling_agrees_with_horn_sets(n):
    # a tuple survives sampling iff it is a Horn triple (differences would be reported here)
    for r in range(1, n):
        subs = list(itertools.combinations(range(1, n + 1), r))
        for tri in itertools.product(subs, repeat=3):
            t = IndexTuple(n, *tri)
            survived = hermitian_falsify(t, 10_000, seed=11) is None
            assert survived == is_horn_triple(t), tri


vecs = st.integers(min_value=1, max_value=6).flatmap(
    lambda n: st.tuples(*[st.lists(small_rats, min_size=n, max_size=n) for _ in range(3)]))


@settings(max_examples=300, deadline=None)
@given(vecs)
def test_majorization_reflexive_and_transitive(xyz):
    x, y, z = xyz
    assert majorizes(x, x).is_true
    assert majorizes(x, list(reversed(x))).is_true
    if majorizes(x, y).is_true and majorizes(y, z).is_true:
        assert majorizes(x, z).is_true


@settings(max_examples=300, deadline=None)
@given(st.lists(small_rats, min_size=2, max_size=6), st.data())
def test_pinch_is_majorized(x, data):
    n = len(x)
    j, k = data.draw(st.lists(st.integers(1, n), min_size=2, max_size=2, unique=True))
    if x[j - 1] < x[k - 1]:
        j, k = k, j
    frac = data.draw(st.fractions(min_value=0, max_value=1, max_denominator=8))
    alpha = (x[j - 1] - x[k - 1]) / 2 * frac
    assert majorizes(x, pinch(x, j, k, alpha)).is_true
