"""Multivariate convolution on polynomials of bounded degree in each variable.

Real stability of multiaffine polynomials is decided through the strongly
Rayleigh criterion: every ``D_ij = d_i p * d_j p - p * d_i d_j p`` must be
nonnegative on all of R^n.  With three variables each ``D_ij`` is a quadratic
in a single variable, so the decision is exact.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping, Sequence

import numpy as np

from .errors import (
    GammaMismatch,
    IndexOutOfRange,
    NotMultiaffine,
    ParseError,
    PoleAtPoint,
    StabilityNotCertified,
)
from .poly import RatLike, RatPoly, as_rat, rat_to_str
from .report import VerdictReport
from .roots import FALSE, TRUE, Trilean, real_roots

Exp = tuple[int, ...]


@dataclass(frozen=True, init=False)
class MultiPoly:
    """Exact polynomial in ``len(gamma)`` variables with ``deg_i <= gamma_i``."""

    gamma: tuple[int, ...]
    terms: tuple[tuple[Exp, Fraction], ...]

    def __init__(self, gamma: Iterable[int], terms: Mapping[Exp, RatLike] | Iterable = ()):
        gamma = tuple(int(g) for g in gamma)
        if any(g < 0 for g in gamma):
            raise ValueError("degree bounds must be non-negative")
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[Exp, Fraction] = {}
        for mu, c in items:
            mu = tuple(int(m) for m in mu)
            if len(mu) != len(gamma):
                raise GammaMismatch(f"exponent {mu} has wrong length for gamma {gamma}")
            if any(m < 0 or m > g for m, g in zip(mu, gamma)):
                raise GammaMismatch(f"exponent {mu} exceeds gamma {gamma}")
            acc[mu] = acc.get(mu, Fraction(0)) + as_rat(c)
        object.__setattr__(self, "gamma", gamma)
        object.__setattr__(self, "terms", tuple(sorted((m, c) for m, c in acc.items() if c)))

    @classmethod
    def multiaffine(cls, n: int, terms) -> MultiPoly:
        return cls((1,) * n, terms)

    @classmethod
    def variable(cls, gamma: Sequence[int], i: int) -> MultiPoly:
        mu = [0] * len(gamma)
        mu[i] = 1
        return cls(gamma, {tuple(mu): 1})

    @property
    def n_vars(self) -> int:
        return len(self.gamma)

    @property
    def coeffs(self) -> dict[Exp, Fraction]:
        return dict(self.terms)

    def coeff(self, mu: Sequence[int]) -> Fraction:
        return self.coeffs.get(tuple(mu), Fraction(0))

    def is_zero(self) -> bool:
        return not self.terms

    def is_multiaffine(self) -> bool:
        return all(m <= 1 for mu, _ in self.terms for m in mu)

    def with_gamma(self, gamma: Sequence[int]) -> MultiPoly:
        return MultiPoly(gamma, self.terms)

    def _join(self, other: MultiPoly) -> tuple[int, ...]:
        if self.n_vars != other.n_vars:
            raise GammaMismatch("different numbers of variables")
        return tuple(max(a, b) for a, b in zip(self.gamma, other.gamma))

    def __add__(self, other: MultiPoly) -> MultiPoly:
        g = self._join(other)
        return MultiPoly(g, list(self.terms) + list(other.terms))

    def __neg__(self) -> MultiPoly:
        return MultiPoly(self.gamma, [(m, -c) for m, c in self.terms])

    def __sub__(self, other: MultiPoly) -> MultiPoly:
        return self + (-other)

    def __mul__(self, other) -> MultiPoly:
        if not isinstance(other, MultiPoly):
            c = as_rat(other)
            return MultiPoly(self.gamma, [(m, v * c) for m, v in self.terms])
        if self.n_vars != other.n_vars:
            raise GammaMismatch("different numbers of variables")
        g = tuple(a + b for a, b in zip(self.gamma, other.gamma))
        out: dict[Exp, Fraction] = {}
        for m1, c1 in self.terms:
            for m2, c2 in other.terms:
                m = tuple(a + b for a, b in zip(m1, m2))
                out[m] = out.get(m, Fraction(0)) + c1 * c2
        return MultiPoly(g, out)

    __rmul__ = __mul__

    def __call__(self, a: Sequence[RatLike]) -> Fraction:
        return meval(self, a)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for mu, c in reversed(self.terms):
            mono = "*".join(f"x{i + 1}" + (f"^{m}" if m > 1 else "") for i, m in enumerate(mu) if m)
            parts.append(f"{c}" + (f"*{mono}" if mono else ""))
        return " + ".join(parts)

    def to_json(self) -> dict:
        return {
            "gamma": list(self.gamma),
            "terms": [{"mu": list(m), "c": rat_to_str(c)} for m, c in self.terms],
        }

    @classmethod
    def from_json(cls, obj: dict) -> MultiPoly:
        try:
            return cls(obj["gamma"], [(t["mu"], Fraction(t["c"])) for t in obj["terms"]])
        except (KeyError, TypeError, ValueError, ZeroDivisionError) as exc:
            raise ParseError(f"malformed multivariate polynomial JSON: {exc}") from exc


def partial(p: MultiPoly, mu: Sequence[int]) -> MultiPoly:
    """Mixed partial derivative of order ``mu``."""
    mu = tuple(mu)
    if len(mu) != p.n_vars:
        raise GammaMismatch("derivative order has wrong length")
    out = {}
    for nu, c in p.terms:
        if any(a < b for a, b in zip(nu, mu)):
            continue
        f = math.prod(math.perm(a, b) for a, b in zip(nu, mu))
        out[tuple(a - b for a, b in zip(nu, mu))] = c * f
    return MultiPoly(p.gamma, out)


def _d(p: MultiPoly, *idx: int) -> MultiPoly:
    mu = [0] * p.n_vars
    for i in idx:
        mu[i] += 1
    return partial(p, mu)


def meval(p: MultiPoly, a: Sequence[RatLike]) -> Fraction:
    a = [as_rat(v) for v in a]
    if len(a) != p.n_vars:
        raise GammaMismatch("point has wrong dimension")
    total = Fraction(0)
    for mu, c in p.terms:
        term = c
        for x, m in zip(a, mu):
            if m:
                term *= x**m
        total += term
    return total


def mshift(p: MultiPoly, a: Sequence[RatLike]) -> MultiPoly:
    """``p(x + a)``, exactly."""
    a = [as_rat(v) for v in a]
    if len(a) != p.n_vars:
        raise GammaMismatch("shift has wrong dimension")
    cur = dict(p.terms)
    for i, ai in enumerate(a):
        if ai == 0:
            continue
        nxt: dict[Exp, Fraction] = {}
        for mu, c in cur.items():
            e = mu[i]
            for t in range(e + 1):
                nu = mu[:i] + (t,) + mu[i + 1:]
                nxt[nu] = nxt.get(nu, Fraction(0)) + c * math.comb(e, t) * ai ** (e - t)
        cur = nxt
    return MultiPoly(p.gamma, cur)


def mscale(p: MultiPoly, a: Sequence[RatLike]) -> MultiPoly:
    """``p(a_1 x_1, ..., a_n x_n)``."""
    a = [as_rat(v) for v in a]
    out = {}
    for mu, c in p.terms:
        out[mu] = c * math.prod(x**m for x, m in zip(a, mu))
    return MultiPoly(p.gamma, out)


def boxplus_gamma(p: MultiPoly, q: MultiPoly) -> MultiPoly:
    """``sum_mu d^mu p(x) * d^(gamma - mu) q(0)`` with no factorial normalisation."""
    if p.gamma != q.gamma:
        raise GammaMismatch(f"degree bounds differ: {p.gamma} vs {q.gamma}")
    g = p.gamma
    out: dict[Exp, Fraction] = {}
    qc = q.coeffs
    for mu in itertools.product(*(range(k + 1) for k in g)):
        rest = tuple(k - m for k, m in zip(g, mu))
        c = qc.get(rest)
        if not c:
            continue
        w = c * math.prod(math.factorial(r) for r in rest)
        for nu, v in partial(p, mu).terms:
            out[nu] = out.get(nu, Fraction(0)) + w * v
    return MultiPoly(g, out)


def from_univariate(p: RatPoly, n: int | None = None) -> MultiPoly:
    n = p.n if n is None else n
    return MultiPoly((n,), {(i,): c for i, c in enumerate(p.coeffs)})


def to_univariate(p: MultiPoly) -> RatPoly:
    if p.n_vars != 1:
        raise GammaMismatch("need a polynomial in one variable")
    coeffs = [Fraction(0)] * (p.gamma[0] + 1)
    for (m,), c in p.terms:
        coeffs[m] = c
    return RatPoly(coeffs, p.gamma[0])


def restrict_line(p: MultiPoly, base: Sequence[RatLike], direction: Sequence[RatLike]) -> RatPoly:
    """``t -> p(base + t * direction)`` as a univariate polynomial."""
    base = [as_rat(v) for v in base]
    direction = [as_rat(v) for v in direction]
    acc = RatPoly([])
    for mu, c in p.terms:
        term = RatPoly([c])
        for b, d, m in zip(base, direction, mu):
            if m:
                term = term * RatPoly([b, d]) ** m
        acc = acc + term
    return acc


# ---------------------------------------------------------------------------
# real stability


def _require_multiaffine(p: MultiPoly) -> None:
    if not p.is_multiaffine():
        raise NotMultiaffine("operation defined for multiaffine polynomials only")


def rayleigh_difference(p: MultiPoly, i: int, j: int) -> MultiPoly:
    """``d_i p * d_j p - p * d_i d_j p`` (0-based indices); free of ``x_i`` and ``x_j``."""
    _require_multiaffine(p)
    delta = _d(p, i) * _d(p, j) - p * _d(p, i, j)
    for k in (i, j):
        if not _d(delta, k).is_zero():
            raise AssertionError(f"difference depends on x{k + 1}")
    return delta


def _nonneg_in_one_var(delta: MultiPoly) -> Trilean:
    """Exact sign decision for a polynomial that depends on at most one variable."""
    used = {k for mu, _ in delta.terms for k, m in enumerate(mu) if m}
    if not used:
        return TRUE if delta.coeff((0,) * delta.n_vars) >= 0 else FALSE
    (k,) = used
    coeffs: dict[int, Fraction] = {}
    for mu, c in delta.terms:
        coeffs[mu[k]] = c
    if max(coeffs) > 2:
        raise AssertionError("multiaffine differences have degree at most two per variable")
    a, b, c = coeffs.get(2, Fraction(0)), coeffs.get(1, Fraction(0)), coeffs.get(0, Fraction(0))
    if a > 0:
        return TRUE if b * b - 4 * a * c <= 0 else FALSE
    if a < 0:
        return FALSE
    if b != 0:
        return FALSE
    return TRUE if c >= 0 else FALSE


SR_SAMPLES = 256


def strongly_rayleigh(p: MultiPoly, seed: int = 0, samples: int = SR_SAMPLES) -> Trilean:
    """Certified real stability for multiaffine ``p``.

    Exact for up to three variables.  With more variables each difference is
    evaluated on a seeded grid plus random rational points: a negative value
    is a certificate of ``False``, otherwise the answer is Indeterminate
    (reported with width 0, since no interval was refined).
    """
    _require_multiaffine(p)
    if p.is_zero():
        return FALSE
    n = p.n_vars
    deltas = [rayleigh_difference(p, i, j) for i, j in itertools.combinations(range(n), 2)]
    if n <= 3:
        return _decide_exact(p)
    rng = np.random.Generator(np.random.PCG64(np.random.SeedSequence(seed)))
    grid = [Fraction(v) for v in (-2, -1, 0, 1, 2)]
    pts = [list(pt) for pt in itertools.product(grid, repeat=n)][:samples]
    for _ in range(samples):
        pts.append([Fraction(int(rng.integers(-40, 41)), int(rng.integers(1, 9))) for _ in range(n)])
    for d in deltas:
        for pt in pts:
            if meval(d, pt) < 0:
                return FALSE
    return Trilean.indeterminate(Fraction(0))


@lru_cache(maxsize=1024)
def _decide_exact(p: MultiPoly) -> Trilean:
    verdicts = [_nonneg_in_one_var(rayleigh_difference(p, i, j))
                for i, j in itertools.combinations(range(p.n_vars), 2)]
    return FALSE if any(v.is_false for v in verdicts) else TRUE


@dataclass(frozen=True)
class AbVerdict:
    """Same-sign test of ``p(x + a)``; ``True`` means ``a`` is above the roots."""

    point: tuple[Fraction, ...]
    verdict: Trilean
    positive: int
    negative: int
    zero: int

    def to_json(self) -> dict:
        return {
            "point": [rat_to_str(v) for v in self.point],
            "verdict": self.verdict.to_json(),
            "signs": {"positive": self.positive, "negative": self.negative, "zero": self.zero},
        }


def above_roots(p: MultiPoly, a: Sequence[RatLike]) -> AbVerdict:
    """Decide whether ``a`` lies above the roots of a real stable multiaffine ``p``.

    For real stable ``p`` the origin is above the roots exactly when all
    coefficients share a sign, so the test shifts ``p`` by ``a`` and counts
    signs.  Zero coefficients are neutral, which admits boundary points with
    ``p(a) = 0``.
    """
    _require_multiaffine(p)
    if not strongly_rayleigh(p).is_true:
        raise StabilityNotCertified("real stability of p is not certified")
    a = tuple(as_rat(v) for v in a)
    shifted = mshift(p, a)
    pos = sum(1 for _, c in shifted.terms if c > 0)
    neg = sum(1 for _, c in shifted.terms if c < 0)
    total = math.prod(g + 1 for g in p.gamma)
    verdict = TRUE if (pos == 0 or neg == 0) and (pos or neg) else FALSE
    return AbVerdict(a, verdict, pos, neg, total - pos - neg)


def potential(p: MultiPoly, i: int, a: Sequence[RatLike]) -> Fraction:
    """``(d_i p / p)(a)`` for a 1-based variable index ``i``."""
    if not 1 <= i <= p.n_vars:
        raise IndexOutOfRange(f"variable index {i} outside [1, {p.n_vars}]")
    den = meval(p, a)
    if den == 0:
        raise PoleAtPoint("p vanishes at the evaluation point")
    return meval(_d(p, i - 1), a) / den


def diagonal_boundary(p: MultiPoly, base: Sequence[RatLike]) -> Fraction | None:
    """Smallest rational ``s`` (up to a dyadic margin) with ``base + s*1`` above the roots.

    Walks along the all-ones direction starting just above the largest root
    of the restricted polynomial; returns ``None`` if no candidate passes the
    exact same-sign test within a few margins.
    """
    line = restrict_line(p, base, [1] * p.n_vars)
    if line.degree < 1:
        return None
    rs = real_roots(line)
    if len(rs) != line.degree:
        return None
    lo, hi = rs[0].enclosure(Fraction(1, 2**20))
    ev = rs[0].exact_value()
    margins = [Fraction(0)] if ev is not None else []
    margins += [Fraction(1, 2**k) for k in (20, 12, 6, 2)] + [Fraction(1), Fraction(4)]
    top = ev if ev is not None else hi
    for m in margins:
        s = top + m
        if above_roots(p, [as_rat(b) + s for b in base]).verdict.is_true:
            return s
    return None


# ---------------------------------------------------------------------------
# the counterexample


def counterexample_poly() -> MultiPoly:
    """The three-variable strongly Rayleigh polynomial used to refute the strong conjecture."""
    return MultiPoly.multiaffine(3, {
        (1, 1, 1): Fraction(8, 21),
        (1, 1, 0): Fraction(80, 21),
        (1, 0, 1): Fraction(27, 7),
        (0, 1, 1): Fraction(1),
        (1, 0, 0): Fraction(4),
        (0, 1, 0): Fraction(4),
        (0, 0, 1): Fraction(4),
        (0, 0, 0): Fraction(4),
    })


EXPECTED_CONVOLUTION = {
    (1, 1, 1): Fraction(64, 441),
    (1, 1, 0): Fraction(1280, 441),
    (1, 0, 1): Fraction(144, 49),
    (0, 1, 1): Fraction(16, 21),
    (1, 0, 0): Fraction(4768, 147),
    (0, 1, 0): Fraction(32, 3),
    (0, 0, 1): Fraction(226, 21),
    (0, 0, 0): Fraction(1520, 21),
}

PUBLISHED_VALUE = Fraction(-1450, 441)
COMPUTED_VALUE = Fraction(-778, 441)
REFUTING_POINT = (Fraction(-2), Fraction(-1), Fraction(-1))


def _square_form(n: int, k: int, scale: Fraction, a: Fraction, b: Fraction) -> MultiPoly:
    """``scale * (a x_k + b)^2`` (0-based ``k``) as a polynomial in ``n`` variables."""
    lin = MultiPoly.variable((1,) * n, k) * a + MultiPoly((1,) * n, {(0,) * n: b})
    return (lin * lin) * scale


def expected_differences() -> dict[tuple[int, int], MultiPoly]:
    return {
        (0, 1): _square_form(3, 2, Fraction(1, 21), Fraction(7), Fraction(4)),
        (0, 2): _square_form(3, 1, Fraction(4, 7), Fraction(2), Fraction(1)),
        (1, 2): _square_form(3, 0, Fraction(4, 147), Fraction(22), Fraction(21)),
    }


def _same_poly(a: MultiPoly, b: MultiPoly) -> bool:
    return a.coeffs == b.coeffs


def reproduce_counterexample() -> VerdictReport:
    """Recompute every exact value behind the refutation of the strong conjecture.

    The verdict is ``False`` (the conjecture fails) when every check in
    ``details["checks"]`` passes.  The published value at the refuting point
    is compared on its own (``details["published_value_matches"]``): the
    published coefficients, which are reproduced exactly, evaluate to
    ``-778/441`` there, not ``-1450/441``.  Both are negative, so the
    refutation is unaffected.
    """
    p = counterexample_poly()
    checks: dict[str, bool] = {}
    diffs = expected_differences()
    for (i, j), want in diffs.items():
        checks[f"difference_{i + 1}{j + 1}"] = _same_poly(rayleigh_difference(p, i, j), want)
    checks["strongly_rayleigh"] = strongly_rayleigh(p).is_true
    checks["origin_above_roots"] = above_roots(p, (0, 0, 0)).verdict.is_true
    for i in range(3):
        e = [0, 0, 0]
        e[i] = -1
        ab = above_roots(p, e).verdict.is_true
        checks[f"minus_e{i + 1}_above_roots"] = ab
        checks[f"potential_{i + 1}_at_origin_at_most_one"] = potential(p, i + 1, (0, 0, 0)) <= 1
        checks[f"potential_{i + 1}_matches_membership"] = (potential(p, i + 1, (0, 0, 0)) <= 1) == ab
    pp = boxplus_gamma(p, p)
    checks["convolution_coefficients"] = pp.coeffs == EXPECTED_CONVOLUTION
    value = meval(pp, REFUTING_POINT)
    checks["value_negative"] = value < 0
    checks["convolution_strongly_rayleigh"] = strongly_rayleigh(pp).is_true
    checks["point_not_above_roots"] = above_roots(pp, REFUTING_POINT).verdict.is_false
    pot = potential(pp, 1, (-1, -1, -1))
    checks["potential_form_exceeds_one"] = pot > 1
    refuted = all(checks.values())
    # the published value at the refuting point is compared separately: the
    # published coefficients themselves evaluate to COMPUTED_VALUE there
    matches = value == PUBLISHED_VALUE
    return VerdictReport(
        statement="strong-conjecture",
        inputs={"p": p.to_json(), "q": p.to_json(), "point": [rat_to_str(v) for v in REFUTING_POINT]},
        verdict=FALSE if refuted else TRUE,
        witness={
            "convolution": pp.to_json(),
            "value": rat_to_str(value),
            "potential_1_at_minus_one": rat_to_str(pot),
        },
        eps=Fraction(0),
        details={
            "checks": checks,
            "refuted": refuted,
            "published_value": rat_to_str(PUBLISHED_VALUE),
            "published_value_matches": matches,
            "reproduced": refuted and matches,
        },
    )


# ---------------------------------------------------------------------------
# random real stable polynomials


def _det(m: list[list[Fraction]]) -> Fraction:
    m = [row[:] for row in m]
    n = len(m)
    det = Fraction(1)
    for c in range(n):
        piv = next((r for r in range(c, n) if m[r][c] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != c:
            m[c], m[piv] = m[piv], m[c]
            det = -det
        det *= m[c][c]
        for r in range(c + 1, n):
            f = m[r][c] / m[c][c]
            if f:
                for k in range(c, n):
                    m[r][k] -= f * m[c][k]
    return det


def random_real_stable(rng: np.random.Generator, n: int, size: int | None = None) -> MultiPoly:
    """``det(B + sum_i x_i v_i v_i^T)`` for a random symmetric ``B`` and integer ``v_i``.

    Such determinants are real stable, and multiaffine because each
    ``v_i v_i^T`` has rank one.  Coefficients are recovered exactly from the
    values on the corners of the unit cube.
    """
    m = size or n
    while True:
        b = rng.integers(-3, 4, size=(m, m))
        b = (b + b.T) // 2 + np.diag(rng.integers(0, 4, size=m))
        vs = rng.integers(-2, 3, size=(n, m))
        if not vs.any(axis=1).all():
            continue
        vals = {}
        for corner in itertools.product((0, 1), repeat=n):
            mat = b.astype(object) + sum(
                (c * np.outer(v, v) for c, v in zip(corner, vs)), np.zeros((m, m), dtype=object)
            )
            vals[corner] = _det([[Fraction(int(x)) for x in row] for row in mat])
        coeffs = {}
        for mu in itertools.product((0, 1), repeat=n):
            # Moebius inversion over the subsets of mu
            c = Fraction(0)
            for nu in itertools.product(*((0, 1) if k else (0,) for k in mu)):
                c += (-1) ** (sum(mu) - sum(nu)) * vals[nu]
            coeffs[mu] = c
        p = MultiPoly.multiaffine(n, coeffs)
        if not p.is_zero() and any(sum(mu) == n for mu, _ in p.terms):
            return p
