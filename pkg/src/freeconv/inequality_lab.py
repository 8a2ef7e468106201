"""Certified verifiers for root inequalities of the finite free convolution.

Each verifier builds both sides of an inequality as exact linear
combinations of real algebraic roots and hands them to the certified
comparison in :mod:`freeconv.roots`.  The outcome is a
:class:`~freeconv.report.VerdictReport` whose ``inputs`` are exact and JSON
ready, so any report can be replayed with :func:`run_statement`.

The module also holds the interpolation machinery used to prove the
three-polynomial submodularity bound (:func:`pinch_decomposition`,
:func:`find_mu_star`) and a seeded search harness for the open
conjectures on interior roots (:func:`search_conjectures`).
"""

from __future__ import annotations

import itertools
import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Sequence

from .errors import (
    DegreeConditionViolated,
    DegreeDeficient,
    DegreeExceedsAmbient,
    DegreeMismatch,
    IndexOutOfRange,
    IrrationalPivot,
    MuOutOfRange,
    NotRealRooted,
    ParseError,
    PreconditionNotCertified,
    SingleDistinctRoot,
    UnknownStatement,
    ZeroPolynomial,
)
from .majorization import (
    IndexTuple,
    exact_eigenvalues,
    horn_triples,
    majorizes_prefix,
)
from .multiaffine import (
    MultiPoly,
    above_roots,
    boxplus_gamma,
    diagonal_boundary,
    random_real_stable,
    reproduce_counterexample,
    strongly_rayleigh,
)
from .poly import (
    RatLike,
    RatPoly,
    apply_U_alpha,
    as_rat,
    boxplus,
    from_roots,
    rat_to_str,
    root_mean,
)
from .report import VerdictReport
from .roots import (
    DEFAULT_EPS,
    FALSE,
    TRUE,
    LinExpr,
    RealAlgebraic,
    Trilean,
    all_of,
    certify_le,
    certify_nonneg,
    interlaces,
    is_real_rooted,
    padded_roots,
    real_roots,
    top_root,
)
from .sampling import (
    DISTRIBUTIONS,
    RNG_ALGORITHM,
    random_deficient_degrees,
    random_real_rooted,
    trial_rng,
)

# ---------------------------------------------------------------------------
# shared helpers


def _check(p: RatPoly, n: int, name: str, exact: bool = True, deficient=DegreeMismatch) -> None:
    if p.is_zero():
        raise ZeroPolynomial(f"{name} is the zero polynomial")
    if p.degree > n:
        raise DegreeExceedsAmbient(f"deg {name} = {p.degree} exceeds n = {n}")
    if exact and p.degree != n:
        raise deficient(f"deg {name} = {p.degree}, expected {n}")
    if not is_real_rooted(p):
        raise NotRealRooted(f"{name} = {p} is not real-rooted")


def _index_sum(p: RatPoly, S: Sequence[int], n: int) -> LinExpr:
    """``sum_{i in S} lambda_i(p)`` for degree-``n`` ``p``; the full sum is read off the coefficients."""
    if p.degree != n:
        raise DegreeMismatch(f"need degree {n}, got {p.degree}")
    if sorted(S) == list(range(1, n + 1)):
        return LinExpr(n * root_mean(p))
    if list(S) == [1]:
        return LinExpr.of(top_root(p))
    rs = real_roots(p)
    return sum((LinExpr.of(rs[i - 1]) for i in S), LinExpr(0))


def _prefix_sums(values: Sequence[RealAlgebraic], total: Fraction) -> list[LinExpr]:
    out, acc = [], LinExpr(0)
    for v in values[:-1]:
        acc = acc + v
        out.append(acc)
    out.append(LinExpr(total))
    return out


def _add(a: Sequence[LinExpr], b: Sequence[LinExpr]) -> list[LinExpr]:
    return [x + y for x, y in zip(a, b)]


def _bounds_json(e: LinExpr, eps: Fraction) -> list[str]:
    lo, hi = e.bounds(eps)
    return [rat_to_str(lo), rat_to_str(hi)]


def _ineq_report(statement, inputs, lhs, rhs, eps, details=None) -> VerdictReport:
    verdict = certify_le(lhs, rhs, eps)
    witness = None
    if verdict.is_false:
        witness = {"lhs": _bounds_json(lhs, eps), "rhs": _bounds_json(rhs, eps)}
    return VerdictReport(statement, inputs, verdict, witness, eps, details=details or {})


def _maj_report(statement, inputs, big, small, eps, details=None) -> VerdictReport:
    """Report on ``small ≺ big`` given sorted prefix sums of both vectors."""
    verdict = majorizes_prefix(big, small, eps)
    witness = None
    if verdict.is_false:
        for k, (s, b) in enumerate(zip(small, big), start=1):
            if certify_le(s, b, eps).is_false or (k == len(big) and s.const != b.const):
                witness = {"k": k, "lhs": _bounds_json(s, eps), "rhs": _bounds_json(b, eps)}
                break
    return VerdictReport(statement, inputs, verdict, witness, eps, details=details or {})


def _pj(**polys: RatPoly) -> dict:
    return {k: v.to_json() for k, v in polys.items()}


# ---------------------------------------------------------------------------
# two-polynomial statements


def verify_triangle(p: RatPoly, q: RatPoly, n: int, eps: RatLike = DEFAULT_EPS) -> VerdictReport:
    """``lambda_1(p ⊞ q) <= lambda_1(p) + lambda_1(q)``."""
    eps = as_rat(eps)
    _check(p, n, "p")
    _check(q, n, "q")
    pq = boxplus(p, q, n)
    return _ineq_report("triangle", {**_pj(p=p, q=q), "n": n},
                        top_root(pq), LinExpr.of(top_root(p)) + top_root(q), eps)


def verify_weyl(p: RatPoly, q: RatPoly, n: int, i: int, j: int,
                eps: RatLike = DEFAULT_EPS) -> VerdictReport:
    """``lambda_{i+j-1}(p ⊞ q) <= lambda_i(p) + lambda_j(q)``."""
    eps = as_rat(eps)
    if i < 1 or j < 1 or i + j - 1 > n:
        raise IndexOutOfRange(f"i + j - 1 = {i + j - 1} must lie in [1, {n}]")
    _check(p, n, "p")
    _check(q, n, "q")
    pq = boxplus(p, q, n)
    lhs = real_roots(pq)[i + j - 2]
    rhs = LinExpr.of(real_roots(p)[i - 1]) + real_roots(q)[j - 1]
    return _ineq_report("weyl", {**_pj(p=p, q=q), "n": n, "i": i, "j": j}, lhs, rhs, eps)


def _root_prefix(p: RatPoly, n: int) -> list[LinExpr]:
    return _prefix_sums(real_roots(p), n * root_mean(p))


def verify_majorization_conv(p: RatPoly, q: RatPoly, n: int,
                             eps: RatLike = DEFAULT_EPS) -> VerdictReport:
    """``lambda(p ⊞ q) ≺ lambda(p) + lambda(q)``."""
    eps = as_rat(eps)
    _check(p, n, "p", deficient=DegreeDeficient)
    _check(q, n, "q", deficient=DegreeDeficient)
    pq = boxplus(p, q, n)
    big = _add(_root_prefix(p, n), _root_prefix(q, n))
    return _maj_report("maj-conv", {**_pj(p=p, q=q), "n": n}, big, _root_prefix(pq, n), eps)


def verify_maj_preservation(p: RatPoly, q: RatPoly, r: RatPoly, n: int,
                            eps: RatLike = DEFAULT_EPS) -> VerdictReport:
    """Given ``lambda(p) ≺ lambda(q)``, check ``lambda(p ⊞ r) ≺ lambda(q ⊞ r)``."""
    eps = as_rat(eps)
    for name, f in (("p", p), ("q", q), ("r", r)):
        _check(f, n, name, deficient=DegreeDeficient)
    premise = majorizes_prefix(_root_prefix(q, n), _root_prefix(p, n), eps)
    if not premise.is_true:
        raise PreconditionNotCertified(f"lambda(p) ≺ lambda(q) is {premise!r}")
    pr, qr = boxplus(p, r, n), boxplus(q, r, n)
    return _maj_report("maj-preserve", {**_pj(p=p, q=q, r=r), "n": n},
                       _root_prefix(qr, n), _root_prefix(pr, n), eps)


def verify_ualpha_bound(p: RatPoly, q: RatPoly, n: int, alpha: RatLike,
               eps: RatLike = DEFAULT_EPS) -> VerdictReport:
    """``lambda_1(U(p ⊞ q)) + n*alpha <= lambda_1(U p) + lambda_1(U q)`` with ``U = 1 - alpha D``."""
    eps, alpha = as_rat(eps), as_rat(alpha)
    if alpha <= 0:
        raise ValueError("alpha must be positive")
    _check(p, n, "p")
    _check(q, n, "q")
    lhs = LinExpr.of(top_root(apply_U_alpha(boxplus(p, q, n), alpha))) + n * alpha
    rhs = LinExpr.of(top_root(apply_U_alpha(p, alpha))) + top_root(apply_U_alpha(q, alpha))
    return _ineq_report("mss-ualpha", {**_pj(p=p, q=q), "n": n, "alpha": rat_to_str(alpha)},
                        lhs, rhs, eps)


# ---------------------------------------------------------------------------
# three-polynomial statements


def submodularity_sides(p: RatPoly, q: RatPoly, r: RatPoly, n: int) -> tuple[LinExpr, LinExpr]:
    pr, qr = boxplus(p, r, n), boxplus(q, r, n)
    pqr = boxplus(pr, q, n)
    lhs = LinExpr.of(top_root(pqr)) + top_root(r)
    rhs = LinExpr.of(top_root(pr)) + top_root(qr)
    return lhs, rhs


def verify_submodularity(p: RatPoly, q: RatPoly, r: RatPoly, n: int,
                         eps: RatLike = DEFAULT_EPS) -> VerdictReport:
    """``lambda_1(p ⊞ q ⊞ r) + lambda_1(r) <= lambda_1(p ⊞ r) + lambda_1(q ⊞ r)``.

    Inputs may have degree below ``n`` as long as every polynomial has
    degree at least one and the total deficiency is below ``n``.
    """
    eps = as_rat(eps)
    for name, f in (("p", p), ("q", q), ("r", r)):
        _check(f, n, name, exact=False)
    degs = (p.degree, q.degree, r.degree)
    if min(degs) < 1 or sum(n - d for d in degs) >= n:
        raise DegreeConditionViolated(f"degrees {degs} violate the deficiency condition for n = {n}")
    lhs, rhs = submodularity_sides(p, q, r, n)
    return _ineq_report("submodularity", {**_pj(p=p, q=q, r=r), "n": n}, lhs, rhs, eps)


def verify_4tuple(t: IndexTuple, p: RatPoly, q: RatPoly, r: RatPoly, n: int,
                  eps: RatLike = DEFAULT_EPS) -> VerdictReport:
    """One instance of ``sum_I lam(pqr) + sum_L lam(r) <= sum_J lam(pr) + sum_K lam(qr)``.

    ``t.L`` defaults to ``t.I``.
    """
    eps = as_rat(eps)
    if t.n != n:
        raise IndexOutOfRange(f"tuple is for n = {t.n}, inputs for n = {n}")
    for name, f in (("p", p), ("q", q), ("r", r)):
        _check(f, n, name)
    L = t.L if t.L is not None else t.I
    pr, qr = boxplus(p, r, n), boxplus(q, r, n)
    pqr = boxplus(pr, q, n)
    lhs = _index_sum(pqr, t.I, n) + _index_sum(r, L, n)
    rhs = _index_sum(pr, t.J, n) + _index_sum(qr, t.K, n)
    tt = IndexTuple(n, t.I, t.J, t.K, L)
    return _ineq_report("4tuple", {**_pj(p=p, q=q, r=r), "n": n, "tuple": tt.to_json()}, lhs, rhs, eps)


def verify_basecase_majorization(p: RatPoly, q: RatPoly, r: RatPoly, n: int,
                                 eps: RatLike = DEFAULT_EPS) -> VerdictReport:
    """For linear ``p``: ``lam^n(pqr) + lam^n(r) ≺ lam^n(pr) + lam^n(qr)`` with mean padding."""
    eps = as_rat(eps)
    if p.degree != 1:
        raise DegreeMismatch(f"deg p must be 1, got {p.degree}")
    _check(p, n, "p", exact=False)
    _check(q, n, "q")
    _check(r, n, "r")
    pr, qr = boxplus(p, r, n), boxplus(q, r, n)
    pqr = boxplus(pr, q, n)

    def padded_prefix(f: RatPoly) -> list[LinExpr]:
        return _prefix_sums(padded_roots(f, n), n * root_mean(f))

    small = _add(padded_prefix(pqr), padded_prefix(r))
    big = _add(padded_prefix(pr), padded_prefix(qr))
    return _maj_report("basecase", {**_pj(p=p, q=q, r=r), "n": n}, big, small, eps)


def beta(p: RatPoly, q: RatPoly, r: RatPoly, n: int) -> LinExpr:
    """The submodularity defect ``lhs - rhs``; never positive for real-rooted inputs."""
    lhs, rhs = submodularity_sides(p, q, r, n)
    return lhs - rhs


def beta_scan(q: RatPoly, r: RatPoly, n: int, k: int, grid: Sequence[RatLike],
              eps: RatLike = DEFAULT_EPS) -> Trilean:
    """Certify ``beta(p) <= 0`` for every monic ``p`` of degree ``k`` with roots on ``grid``."""
    eps = as_rat(eps)
    verdicts = []
    for roots in itertools.combinations_with_replacement(sorted(set(map(as_rat, grid))), k):
        v = certify_nonneg(-beta(from_roots(roots), q, r, n), eps)
        if v.is_false:
            return FALSE
        verdicts.append(v)
    return all_of(verdicts)


def verify_matrix_submodularity(a, b, c, eps: RatLike = DEFAULT_EPS) -> VerdictReport:
    """The matrix analogue ``lam_1(A+B+C) + lam_1(C) <= lam_1(A+C) + lam_1(B+C)`` (which can fail)."""
    eps = as_rat(eps)

    def mat(m):
        return [[as_rat(x) for x in row] for row in m]

    def add(*ms):
        return [[sum(xs) for xs in zip(*rows)] for rows in zip(*ms)]

    a, b, c = mat(a), mat(b), mat(c)
    top = lambda m: exact_eigenvalues(m)[0]
    lhs = LinExpr.of(top(add(a, b, c))) + top(c)
    rhs = LinExpr.of(top(add(a, c))) + top(add(b, c))
    enc = lambda m: [[rat_to_str(x) for x in row] for row in m]
    return _ineq_report("matrix-submodularity", {"A": enc(a), "B": enc(b), "C": enc(c)}, lhs, rhs, eps)


MATRIX_COUNTEREXAMPLE = ([[2, 0], [0, 0]], [[2, 0], [0, 0]], [[0, 0], [0, 2]])


# ---------------------------------------------------------------------------
# interpolation between p and a pinched copy


@dataclass(frozen=True)
class PinchDecomposition:
    """``p = p_tilde + p_hat`` where ``p_tilde`` merges the top two distinct roots into ``mu``."""

    mu0: Fraction
    mu1: Fraction
    mu: Fraction
    k: int
    p_tilde: RatPoly
    p_hat: RatPoly
    f_mu: RatPoly
    rho: Fraction | None
    certificates: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return {
            "mu0": rat_to_str(self.mu0),
            "mu1": rat_to_str(self.mu1),
            "mu": rat_to_str(self.mu),
            "k": self.k,
            "p_tilde": self.p_tilde.to_json(),
            "p_hat": self.p_hat.to_json(),
            "f_mu": self.f_mu.to_json(),
            "rho": None if self.rho is None else rat_to_str(self.rho),
            "certificates": {k: v.to_json() for k, v in sorted(self.certificates.items())},
        }


@dataclass(frozen=True)
class _Pivot:
    l1: Fraction
    lk: Fraction
    k: int
    rest: RatPoly  # prod over the other roots

    @property
    def mu0(self) -> Fraction:
        return (self.l1 + self.lk) / 2


def _pivot(p: RatPoly) -> _Pivot:
    if p.lc != 1:
        raise ValueError("p must be monic")
    if not is_real_rooted(p):
        raise NotRealRooted(f"{p} is not real-rooted")
    rs = real_roots(p)
    top = rs[0]
    k = next((i for i, v in enumerate(rs) if v.key != top.key or v.index != top.index
              or v.offset != top.offset), None)
    if k is None:
        raise SingleDistinctRoot("p has a single distinct root")
    l1, lk = top.exact_value(), rs[k].exact_value()
    if l1 is None or lk is None:
        raise IrrationalPivot("the two largest distinct roots must be rational")
    rest, rem = divmod(p, from_roots([l1, lk]))
    if not rem.is_zero():
        raise AssertionError("pivot roots do not divide p")
    return _Pivot(l1, lk, k + 1, rest)


def _p_tilde(pv: _Pivot, mu: Fraction, n: int) -> RatPoly:
    return (from_roots([mu, mu]) * pv.rest).with_ambient(n)


def pinch_decomposition(p: RatPoly, mu: RatLike, eps: RatLike = DEFAULT_EPS) -> PinchDecomposition:
    """Split monic real-rooted ``p`` at ``mu`` in ``[mu0, mu1]``.

    ``mu1`` is the largest root and ``mu0`` the midpoint between it and the
    next distinct root.  Both pivot roots must be rational so the pieces stay
    in exact rational arithmetic.
    """
    eps, mu = as_rat(eps), as_rat(mu)
    n = p.degree
    pv = _pivot(p)
    mu0, mu1 = pv.mu0, pv.l1
    if not mu0 <= mu <= mu1:
        raise MuOutOfRange(f"mu = {mu} outside [{mu0}, {mu1}]")
    pt = _p_tilde(pv, mu, n)
    ph = (p - pt).with_ambient(n)
    f = (from_roots([mu]) * pv.rest).with_ambient(n)
    s = pv.l1 + pv.lk
    closed = RatPoly([-(mu * mu - pv.l1 * pv.lk), 2 * mu - s]) * pv.rest
    cert: dict[str, Trilean] = {
        "sum_identity": TRUE if pt + ph == p else FALSE,
        "closed_form": TRUE if ph == closed else FALSE,
        "f_interlaces_p_tilde": interlaces(f, pt, eps),
        "f_interlaces_p": interlaces(f, p, eps),
    }
    rho = None
    if mu > mu0:
        rho = (mu * mu - pv.l1 * pv.lk) / (2 * mu - s)
        cert["p_hat_degree"] = TRUE if ph.degree == n - 1 and ph.lc > 0 else FALSE
        cert["rho_at_least_top"] = TRUE if rho >= pv.l1 else FALSE
        cert["f_interlaces_p_hat"] = interlaces(f, ph, eps)
    else:
        cert["p_hat_degree"] = TRUE if ph.degree == n - 2 and ph.lc < 0 else FALSE
    return PinchDecomposition(mu0, mu1, mu, pv.k, pt, ph, f, rho, cert)


@dataclass(frozen=True)
class MuStar:
    """Enclosure ``[lo, hi]`` of the largest ``mu`` keeping ``lambda_1(p_tilde ⊞ r)`` at ``lambda_1(p ⊞ r)``."""

    lo: Fraction
    hi: Fraction
    mu0: Fraction
    mu1: Fraction
    steps: tuple[Fraction, ...]
    above_mu0: Trilean
    monotone: Trilean
    endpoint_bounds: Trilean
    tilde_close: Trilean
    hat_close: Trilean

    @property
    def proposition(self) -> Trilean:
        return all_of([self.tilde_close, self.hat_close])

    def to_json(self) -> dict:
        return {
            "lo": rat_to_str(self.lo),
            "hi": rat_to_str(self.hi),
            "mu0": rat_to_str(self.mu0),
            "mu1": rat_to_str(self.mu1),
            "steps": len(self.steps),
            "above_mu0": self.above_mu0.to_json(),
            "monotone": self.monotone.to_json(),
            "endpoint_bounds": self.endpoint_bounds.to_json(),
            "tilde_close": self.tilde_close.to_json(),
            "hat_close": self.hat_close.to_json(),
        }


def _within(x, target, eps: Fraction) -> Trilean:
    d = LinExpr.of(x) - LinExpr.of(target)
    return all_of([certify_nonneg(eps - d, eps / 64), certify_nonneg(d + eps, eps / 64)])


MU_STAR_MAX_STEPS = 400


def find_mu_star(p: RatPoly, r: RatPoly, n: int, eps: RatLike = DEFAULT_EPS) -> MuStar:
    """Bisect for the plateau end of ``mu -> lambda_1(p_tilde_mu ⊞ r)`` at the level ``lambda_1(p ⊞ r)``.

    The map is non-decreasing in ``mu``, so the predicate "greater than the
    target" is monotone and bisection is sound.  Bisection stops once the
    upper end brings both ``lambda_1(p_tilde ⊞ r)`` and ``lambda_1(p_hat ⊞ r)``
    within ``eps`` of the target.  Every evaluated ``mu`` is kept so the
    monotonicity can be certified step by step.
    """
    eps = as_rat(eps)
    _check(p, n, "p")
    _check(r, n, "r")
    p = p.monic().with_ambient(n)
    pv = _pivot(p)
    mu0, mu1 = pv.mu0, pv.l1
    target = top_root(boxplus(p, r, n))
    lam_cache: dict[Fraction, RealAlgebraic] = {}

    def lam(mu: Fraction) -> RealAlgebraic:
        if mu not in lam_cache:
            lam_cache[mu] = top_root(boxplus(_p_tilde(pv, mu, n), r, n))
        return lam_cache[mu]

    def hat_top(mu: Fraction) -> RealAlgebraic:
        return top_root(boxplus((p - _p_tilde(pv, mu, n)).with_ambient(n), r, n))

    endpoint = all_of([certify_le(lam(mu0), target, eps), certify_le(target, lam(mu1), eps)])
    lo, hi = mu0, mu1
    at_top = certify_le(lam(mu1), target, eps)
    if at_top.is_true:
        lo = mu1
    else:
        for _ in range(MU_STAR_MAX_STEPS):
            if hi - lo <= eps:
                if _within(lam(hi), target, eps).is_true and _within(hat_top(hi), target, eps).is_true:
                    break
            mid = (lo + hi) / 2
            for tol in (eps / 64, eps**2, eps**4):
                v = certify_le(lam(mid), target, tol)
                if not v.is_indeterminate:
                    break
            # still undecided at eps^4: mid is on the level to that precision
            if v.is_false:
                hi = mid
            else:
                lo = mid
    steps = tuple(sorted(lam_cache))
    mono = all_of([certify_le(lam(a), lam(b), eps) for a, b in zip(steps, steps[1:])])
    if lo > mu0:
        above = TRUE
    else:
        above = Trilean.indeterminate(hi - lo)
    return MuStar(lo, hi, mu0, mu1, steps, above, mono, endpoint,
                  _within(lam(hi), target, eps), _within(hat_top(hi), target, eps))


# ---------------------------------------------------------------------------
# statement dispatch (used by the CLI and for re-verification)


def _poly(inputs: dict, key: str) -> RatPoly:
    try:
        return RatPoly.from_json(inputs[key])
    except KeyError as exc:
        raise ParseError(f"missing input {key!r}") from exc


def _mpoly(inputs: dict, key: str) -> MultiPoly:
    try:
        return MultiPoly.from_json(inputs[key])
    except KeyError as exc:
        raise ParseError(f"missing input {key!r}") from exc


def _n(inputs: dict) -> int:
    if "n" in inputs:
        return int(inputs["n"])
    return _poly(inputs, "p").n


def _sr_check(inputs: dict, eps: Fraction) -> VerdictReport:
    p = _mpoly(inputs, "p")
    seed = int(inputs.get("seed", 0))
    v = strongly_rayleigh(p, seed=seed)
    return VerdictReport("sr-check", {"p": p.to_json()}, v, {"p": p.to_json()} if v.is_false else None, eps)


def _above_roots(inputs: dict, eps: Fraction) -> VerdictReport:
    p = _mpoly(inputs, "p")
    pt = [Fraction(x) for x in inputs["point"]]
    ab = above_roots(p, pt)
    return VerdictReport("above-roots", {"p": p.to_json(), "point": [rat_to_str(x) for x in pt]},
                         ab.verdict, ab.to_json() if ab.verdict.is_false else None, eps,
                         details={"signs": ab.to_json()["signs"]})


STATEMENTS: dict[str, Callable[[dict, Fraction], VerdictReport]] = {
    "triangle": lambda d, e: verify_triangle(_poly(d, "p"), _poly(d, "q"), _n(d), e),
    "weyl": lambda d, e: verify_weyl(_poly(d, "p"), _poly(d, "q"), _n(d), int(d["i"]), int(d["j"]), e),
    "maj-conv": lambda d, e: verify_majorization_conv(_poly(d, "p"), _poly(d, "q"), _n(d), e),
    "maj-preserve": lambda d, e: verify_maj_preservation(
        _poly(d, "p"), _poly(d, "q"), _poly(d, "r"), _n(d), e),
    "submodularity": lambda d, e: verify_submodularity(
        _poly(d, "p"), _poly(d, "q"), _poly(d, "r"), _n(d), e),
    "4tuple": lambda d, e: verify_4tuple(
        IndexTuple.from_json(d["tuple"]), _poly(d, "p"), _poly(d, "q"), _poly(d, "r"), _n(d), e),
    "basecase": lambda d, e: verify_basecase_majorization(
        _poly(d, "p"), _poly(d, "q"), _poly(d, "r"), _n(d), e),
    "mss-ualpha": lambda d, e: verify_ualpha_bound(_poly(d, "p"), _poly(d, "q"), _n(d), Fraction(d["alpha"]), e),
    "sr-check": _sr_check,
    "above-roots": _above_roots,
    "matrix-submodularity": lambda d, e: verify_matrix_submodularity(d["A"], d["B"], d["C"], e),
    "strong-conjecture": lambda d, e: reproduce_counterexample(),
}


def run_statement(statement: str, inputs: dict, eps: RatLike = DEFAULT_EPS) -> VerdictReport:
    """Run a verifier by statement id on JSON-form inputs."""
    fn = STATEMENTS.get(statement)
    if fn is None:
        raise UnknownStatement(f"unknown statement {statement!r}; known: {sorted(STATEMENTS)}")
    try:
        return fn(inputs, as_rat(eps))
    except (KeyError, TypeError) as exc:
        raise ParseError(f"malformed inputs for {statement}: {exc}") from exc


def reverify(report: VerdictReport) -> VerdictReport:
    """Replay a report from its serialised form (a JSON round trip) and return the fresh result."""
    obj = json.loads(json.dumps(report.to_json()))
    return run_statement(obj["statement"], obj["inputs"], Fraction(obj["eps"]))


# ---------------------------------------------------------------------------
# conjecture search


CONJECTURES = ("2.3", "2.4", "2.5", "submodularity", "mv-submodularity")


@dataclass(frozen=True)
class SearchConfig:
    """What to search: the conjecture id, the degree and the root distribution."""

    conjecture: str
    n: int = 3
    distributions: tuple[str, ...] = DISTRIBUTIONS
    num: int = 6
    den: int = 4
    eps: Fraction = DEFAULT_EPS

    def __post_init__(self):
        if self.conjecture not in CONJECTURES:
            raise UnknownStatement(f"unknown conjecture {self.conjecture!r}; known: {list(CONJECTURES)}")
        if not 1 <= self.n <= 6:
            raise IndexOutOfRange("search supports 1 <= n <= 6")

    def to_json(self) -> dict:
        return {
            "conjecture": self.conjecture,
            "n": self.n,
            "distributions": list(self.distributions),
            "num": self.num,
            "den": self.den,
            "eps": rat_to_str(self.eps),
        }


def _draw(rng, cfg: SearchConfig, d: int | None = None) -> RatPoly:
    return random_real_rooted(rng, cfg.n if d is None else d, cfg.n, cfg.distributions, cfg.num, cfg.den)


def _non_horn(n: int, r: int) -> list[tuple]:
    subs = list(itertools.combinations(range(1, n + 1), r))
    horn = {t.triple for t in horn_triples(n, r)}
    return [t for t in itertools.product(subs, repeat=3) if t not in horn]


def _tagged(rep: VerdictReport, seed: int, trial: int, **extra) -> VerdictReport:
    details = dict(rep.details)
    details.update(trial=trial, **extra)
    return VerdictReport(rep.statement, rep.inputs, rep.verdict, rep.witness, rep.eps, seed, details)


def _mv_trial(rng, nvars: int, eps: Fraction, candidates: int = 8) -> VerdictReport:
    """One pointwise test of ``Ab(pqr) + Ab(r) ⊇ Ab(pr) + Ab(qr)`` for multiaffine inputs.

    Points ``a`` and ``b`` are put on the boundary of ``Ab(pr)`` and
    ``Ab(qr)`` along the diagonal; then several ``d`` on the boundary of
    ``Ab(r)`` are tried, looking for one with ``a + b - d`` above the roots
    of ``pqr``.  Success certifies containment at ``a + b``; failure proves
    nothing, so the verdict is never ``False``.
    """
    p, q, r = (random_real_stable(rng, nvars) for _ in range(3))
    pr, qr = boxplus_gamma(p, r), boxplus_gamma(q, r)
    pqr = boxplus_gamma(pr, q)
    inputs = {"p": p.to_json(), "q": q.to_json(), "r": r.to_json()}
    polys = {"pr": pr, "qr": qr, "pqr": pqr}
    stable = {k: strongly_rayleigh(v) for k, v in polys.items()}
    if not all(v.is_true for v in stable.values()):
        return VerdictReport("mv-submodularity", inputs, Trilean.indeterminate(Fraction(0)), None, eps,
                             details={"stability": {k: v.to_json() for k, v in stable.items()}})

    def rand_pt():
        return [Fraction(int(rng.integers(-4, 5)), int(rng.integers(1, 3))) for _ in range(nvars)]

    def boundary(f, base):
        s = diagonal_boundary(f, base)
        return None if s is None else [b + s for b in base]

    a, b = boundary(pr, rand_pt()), boundary(qr, rand_pt())
    if a is None or b is None:
        return VerdictReport("mv-submodularity", inputs, Trilean.indeterminate(Fraction(0)), None, eps,
                             details={"reason": "no boundary point"})
    z = [x + y for x, y in zip(a, b)]
    for _ in range(candidates):
        d = boundary(r, rand_pt())
        if d is None:
            continue
        c = [x - y for x, y in zip(z, d)]
        if above_roots(pqr, c).verdict.is_true:
            return VerdictReport("mv-submodularity", inputs, TRUE, None, eps, details={
                "a": [rat_to_str(x) for x in a], "b": [rat_to_str(x) for x in b],
                "c": [rat_to_str(x) for x in c], "d": [rat_to_str(x) for x in d],
            })
    return VerdictReport("mv-submodularity", inputs, Trilean.indeterminate(Fraction(0)), None, eps,
                         details={"a": [rat_to_str(x) for x in a], "b": [rat_to_str(x) for x in b]})


def run_trial(cfg: SearchConfig, seed: int, trial: int) -> list[VerdictReport]:
    """All reports of one trial; depends only on ``(cfg, seed, trial)``."""
    rng = trial_rng(seed, trial)
    n, eps = cfg.n, cfg.eps
    c = cfg.conjecture
    if c == "mv-submodularity":
        return [_tagged(_mv_trial(rng, min(max(n, 2), 3), eps), seed, trial)]
    if c == "submodularity":
        if n > 1 and rng.integers(0, 2):
            dp, dq, dr = random_deficient_degrees(rng, n)
        else:
            dp = dq = dr = n
        p, q, r = _draw(rng, cfg, dp), _draw(rng, cfg, dq), _draw(rng, cfg, dr)
        return [_tagged(verify_submodularity(p, q, r, n, eps), seed, trial)]
    p, q, r = _draw(rng, cfg), _draw(rng, cfg), _draw(rng, cfg)
    if c == "2.3":
        size = int(rng.integers(1, n + 1))
        triples = sorted(t.triple for t in horn_triples(n, size))
        I, J, K = triples[int(rng.integers(0, len(triples)))]
        rep = verify_4tuple(IndexTuple(n, I, J, K, I), p, q, r, n, eps)
        return [_tagged(rep, seed, trial, horn=True)]
    if c == "2.4":
        sizes = [s for s in range(1, n + 1) if _non_horn(n, s)]
        if not sizes:
            return []
        size = sizes[int(rng.integers(0, len(sizes)))]
        cands = _non_horn(n, size)
        I, J, K = cands[int(rng.integers(0, len(cands)))]
        rep = verify_4tuple(IndexTuple(n, I, J, K, I), p, q, r, n, eps)
        return [_tagged(rep, seed, trial, horn=False)]
    # 2.5: a Weyl triple and the two proposed values of l
    weyl = [(i, j, k) for i in range(1, n + 1) for j in range(1, n + 1)
            for k in range(1, n + 1) if i >= j + k - 1]
    i, j, k = weyl[int(rng.integers(0, len(weyl)))]
    m = max(j, k)
    out = []
    for form, l in (("max", m), ("reflected", n + 1 - m)):
        rep = verify_4tuple(IndexTuple(n, (i,), (j,), (k,), (l,)), p, q, r, n, eps)
        out.append(_tagged(rep, seed, trial, form=form))
    return out


def _run_chunk(args) -> list[tuple[int, list[VerdictReport]]]:
    cfg, seed, trials = args
    return [(t, run_trial(cfg, seed, t)) for t in trials]


def search_conjectures(cfg: SearchConfig, trials: int, seed: int = 0,
                       workers: int = 1) -> tuple[list[VerdictReport], dict]:
    """Run ``trials`` seeded trials; returns the reports (ordered by trial) and a summary.

    Every certified violation is replayed from its JSON form before being
    emitted; a replay that disagrees raises ``AssertionError``.  With
    ``workers > 1`` trials are spread over processes, which cannot change
    the output because each trial owns its random stream.
    """
    idx = list(range(trials))
    if workers > 1 and trials > 1:
        chunks = [idx[w::workers] for w in range(workers)]
        with ProcessPoolExecutor(max_workers=workers) as ex:
            parts = list(ex.map(_run_chunk, [(cfg, seed, ch) for ch in chunks]))
        results = sorted((pair for part in parts for pair in part), key=lambda x: x[0])
    else:
        results = _run_chunk((cfg, seed, idx))
    reports = [rep for _, reps in results for rep in reps]
    for rep in reports:
        if rep.verdict.is_false:
            again = reverify(rep)
            if not again.verdict.is_false:
                raise AssertionError(f"violation did not replay: {rep.to_json()}")
            rep.details["reverified"] = True
    summary = {
        "statement": cfg.conjecture,
        "config": cfg.to_json(),
        "trials": trials,
        "reports": len(reports),
        "verified": sum(r.verdict.is_true for r in reports),
        "violated": sum(r.verdict.is_false for r in reports),
        "indeterminate": sum(r.verdict.is_indeterminate for r in reports),
        "seeds": [seed],
        "rng": RNG_ALGORITHM,
    }
    if cfg.conjecture == "2.4":
        viol = {json.dumps(r.inputs["tuple"], sort_keys=True) for r in reports if r.verdict.is_false}
        summary["violating_tuples"] = [json.loads(v) for v in sorted(viol)]
    return reports, summary
