from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import real_rooted, small_rats
from freeconv.errors import (
    DegreeConditionViolated,
    DegreeDeficient,
    DegreeMismatch,
    IndexOutOfRange,
    IrrationalPivot,
    MuOutOfRange,
    PreconditionNotCertified,
    SingleDistinctRoot,
    UnknownStatement,
)
from freeconv.inequality_lab import (
    MATRIX_COUNTEREXAMPLE,
    SearchConfig,
    beta_scan,
    find_mu_star,
    pinch_decomposition,
    reverify,
    run_statement,
    search_conjectures,
    verify_4tuple,
    verify_basecase_majorization,
    verify_maj_preservation,
    verify_majorization_conv,
    verify_matrix_submodularity,
    verify_ualpha_bound,
    verify_submodularity,
    verify_triangle,
    verify_weyl,
)
from freeconv.majorization import IndexTuple
from freeconv.poly import RatPoly, from_roots, u_alpha
from freeconv.report import VerdictReport

X2M1 = RatPoly([-1, 0, 1])


def xn(n):
    return RatPoly.monomial(n, 1, n)


def test_triangle_examples():
    assert verify_triangle(X2M1, X2M1, 2).verdict.is_true
    assert verify_triangle(xn(3), from_roots([1, 2, 3]), 3).verdict.is_true
    assert verify_triangle(from_roots([1, 1]), from_roots([1, 1]), 2).verdict.is_true


def test_weyl_examples():
    assert verify_weyl(X2M1, X2M1, 2, 1, 1).verdict == verify_triangle(X2M1, X2M1, 2).verdict
    assert verify_weyl(X2M1, X2M1, 2, 1, 2).verdict.is_true
    with pytest.raises(IndexOutOfRange):
        verify_weyl(X2M1, X2M1, 2, 2, 2)


def test_majorization_conv_examples():
    assert verify_majorization_conv(X2M1, X2M1, 2).verdict.is_true
    assert verify_majorization_conv(from_roots([3, 1, -1]), xn(3), 3).verdict.is_true
    assert verify_majorization_conv(RatPoly([0, -2, 1]), X2M1, 2).verdict.is_true
    with pytest.raises(DegreeDeficient):
        verify_majorization_conv(RatPoly([0, 1], 2), X2M1, 2)


def test_maj_preservation_examples():
    assert verify_maj_preservation(from_roots([1, 1]), RatPoly([0, -2, 1]), X2M1, 2).verdict.is_true
    assert verify_maj_preservation(X2M1, X2M1, X2M1, 2).verdict.is_true
    assert verify_maj_preservation(xn(2), X2M1, X2M1, 2).verdict.is_true
    with pytest.raises(PreconditionNotCertified):
        verify_maj_preservation(X2M1, xn(2), X2M1, 2)


def test_submodularity_examples():
    assert verify_submodularity(X2M1, X2M1, X2M1, 2).verdict.is_true
    assert verify_submodularity(X2M1, from_roots([2, 5]), xn(2), 2).verdict.is_true
    p = RatPoly([0, -2, 1])
    assert verify_submodularity(p, p, u_alpha(2, 1), 2).verdict.is_true
    assert verify_ualpha_bound(p, p, 2, 1).verdict.is_true


def test_submodularity_degree_condition():
    # deficiencies 1 + 1 + 0 = 2 is not below n = 2
    with pytest.raises(DegreeConditionViolated):
        verify_submodularity(RatPoly([0, 1], 2), RatPoly([0, 1], 2), X2M1, 2)
    # deficiencies 1 + 0 + 0 < 2 is allowed
    assert not verify_submodularity(RatPoly([-3, 1], 2), X2M1, X2M1, 2).verdict.is_false


def test_4tuple_examples():
    p, q, r = from_roots([1, 0, -2]), from_roots([3, 1, 1]), from_roots([2, 2, -1])
    one = IndexTuple(3, (1,), (1,), (1,), (1,))
    assert verify_4tuple(one, p, q, r, 3).verdict == verify_submodularity(p, q, r, 3).verdict
    full = IndexTuple(3, (1, 2, 3), (1, 2, 3), (1, 2, 3), (1, 2, 3))
    rep = verify_4tuple(full, from_roots([Fraction(1, 3), 2, 7]), X2M1.with_ambient(3) * RatPoly([0, 1]),
                        from_roots([1, 2, 4]), 3)
    assert rep.verdict.is_true
    with pytest.raises(IndexOutOfRange):
        verify_4tuple(IndexTuple(2, (1,), (1,), (1,)), p, q, r, 3)


def test_basecase_examples():
    assert verify_basecase_majorization(RatPoly([0, 1]), X2M1, X2M1, 2).verdict.is_true
    assert verify_basecase_majorization(RatPoly([-5, 1]), X2M1, X2M1, 2).verdict.is_true
    assert verify_basecase_majorization(RatPoly([0, 1]), xn(2), X2M1, 2).verdict.is_true
    with pytest.raises(DegreeMismatch):
        verify_basecase_majorization(X2M1, X2M1, X2M1, 2)


def test_matrix_counterexample():
    rep = verify_matrix_submodularity(*MATRIX_COUNTEREXAMPLE)
    assert rep.verdict.is_false
    assert rep.witness == {"lhs": ["6/1", "6/1"], "rhs": ["4/1", "4/1"]}
    assert reverify(rep).verdict.is_false


def test_pinch_decomposition_examples():
    p = from_roots([2, -2])
    d = pinch_decomposition(p, 2)
    assert d.p_tilde == from_roots([2, 2]) and d.p_hat == RatPoly([-8, 4]) and d.rho == 2
    assert all(v.is_true for v in d.certificates.values())
    d = pinch_decomposition(p, 0)
    assert d.p_tilde == RatPoly([0, 0, 1]) and d.p_hat == RatPoly([-4]) and d.rho is None
    assert d.certificates["p_hat_degree"].is_true
    with pytest.raises(MuOutOfRange):
        pinch_decomposition(p, 3)
    with pytest.raises(SingleDistinctRoot):
        pinch_decomposition(from_roots([1, 1]), 1)
    with pytest.raises(IrrationalPivot):
        pinch_decomposition(RatPoly([-2, 0, 1]), 1)


def test_pinch_decomposition_k_skips_repeated_top():
    d = pinch_decomposition(from_roots([3, 3, 1, 0]), Fraction(5, 2))
    assert d.k == 3 and d.mu0 == 2 and d.mu1 == 3
    assert all(v.is_true for v in d.certificates.values())


def test_mu_star_identity_r():
    m = find_mu_star(from_roots([2, -2]), xn(2), 2)
    assert m.lo == m.hi == 2
    assert m.above_mu0.is_true and m.proposition.is_true


def test_mu_star_quadratic():
    m = find_mu_star(from_roots([2, -2]), X2M1, 2)
    # the level is sqrt(5), reached by p_tilde at mu = sqrt(5) - 1
    assert m.lo ** 2 <= (m.lo + 1) ** 2 <= 5 <= (m.hi + 1) ** 2
    for v in (m.above_mu0, m.monotone, m.endpoint_bounds, m.proposition):
        assert v.is_true


def test_beta_scan_nonpositive():
    assert beta_scan(X2M1, from_roots([1, 0]), 2, 1, [-1, 0, 2]).is_true
    assert beta_scan(from_roots([1, 0, 0]), from_roots([3, 1, -1]), 3, 2, [-1, 0, 1]).is_true


def test_run_statement_and_report_round_trip():
    rep = run_statement("triangle", {"p": X2M1.to_json(), "q": X2M1.to_json(), "n": 2})
    assert rep.verdict.is_true
    again = VerdictReport.from_json(rep.to_json())
    assert again.to_json() == rep.to_json()
    with pytest.raises(UnknownStatement):
        run_statement("nonsense", {})


def test_search_is_deterministic_and_reverified():
    cfg = SearchConfig("2.4", n=2)
    a = search_conjectures(cfg, 30, seed=3)
    b = search_conjectures(cfg, 30, seed=3)
    assert [r.to_json() for r in a[0]] == [r.to_json() for r in b[0]] and a[1] == b[1]
    for r in a[0]:
        if r.verdict.is_false:
            assert r.details["reverified"] and reverify(r).verdict.is_false


def test_search_parallel_matches_serial():
    cfg = SearchConfig("2.5", n=3)
    serial = search_conjectures(cfg, 12, seed=1)
    parallel = search_conjectures(cfg, 12, seed=1, workers=3)
    assert [r.to_json() for r in serial[0]] == [r.to_json() for r in parallel[0]]


@pytest.mark.parametrize("conj,n", [("2.3", 3), ("2.5", 3), ("submodularity", 4)])
def test_search_finds_no_violations_of_proven_or_conjectured(conj, n):
    _, summary = search_conjectures(SearchConfig(conj, n=n), 40, seed=2)
    assert summary["violated"] == 0


def test_mv_submodularity_never_false():
    reports, summary = search_conjectures(SearchConfig("mv-submodularity", n=2), 10, seed=4)
    assert summary["violated"] == 0 and summary["verified"] > 0


triples = st.integers(min_value=1, max_value=5).flatmap(
    lambda n: st.tuples(real_rooted(n=n), real_rooted(n=n), real_rooted(n=n)))


@settings(max_examples=150, deadline=None)
@given(triples)
def test_submodularity_never_violated(pqr):
    p, q, r = pqr
    assert not verify_submodularity(p, q, r, p.n).verdict.is_false


@settings(max_examples=100, deadline=None)
@given(st.integers(min_value=1, max_value=4).flatmap(
    lambda n: st.tuples(real_rooted(n=n), real_rooted(n=n))),
    st.sampled_from([Fraction(1, 4), Fraction(1), Fraction(3)]))
def test_ualpha_bound_is_submodularity_with_u_alpha(pq, alpha):
    p, q = pq
    n = p.n
    a = verify_ualpha_bound(p, q, n, alpha).verdict
    b = verify_submodularity(p, q, u_alpha(n, alpha), n).verdict
    assert a == b and not a.is_false


@settings(max_examples=200, deadline=None)
@given(st.lists(small_rats, min_size=2, max_size=6).filter(lambda r: len(set(r)) > 1),
       st.fractions(min_value=0, max_value=1, max_denominator=16))
def test_pinch_sum_identity(roots, t):
    p = from_roots(roots)
    top = max(roots)
    second = max(v for v in roots if v != top)
    mu0 = (top + second) / 2
    d = pinch_decomposition(p, mu0 + (top - mu0) * t)
    assert d.p_tilde + d.p_hat == p
    assert all(not v.is_false for v in d.certificates.values())
