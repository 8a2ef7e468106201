"""Majorization, pinches, Horn triples and a Hermitian sampling oracle.

Vectors may hold rationals, :class:`~freeconv.roots.RealAlgebraic` values or
:class:`~freeconv.roots.RootEnclosure` objects.  Partial sums of the sorted
vectors are compared with the certified machinery of :mod:`freeconv.roots`,
so majorization verdicts are three-valued.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

import numpy as np

from .errors import CrossingPinch, IndexOutOfRange, LengthMismatch, ParseError, UnsupportedSize
from .poly import RatLike, RatPoly, as_rat
from .roots import (
    DEFAULT_EPS,
    FALSE,
    LinExpr,
    RealAlgebraic,
    RootEnclosure,
    Trilean,
    all_of,
    certify_eq,
    certify_le,
    real_roots,
    sort_desc,
)

HORN_MAX_N = 6
FALSIFY_TOL = 1e-8


# ---------------------------------------------------------------------------
# majorization


def _as_exact(x):
    if isinstance(x, RealAlgebraic):
        return x
    if isinstance(x, RootEnclosure):
        if x.value is not None:
            return x.value
        if x.lo == x.hi:
            return RealAlgebraic.rational(x.lo)
        return None
    return RealAlgebraic.rational(as_rat(x))


def _sorted_prefix_sums(v: Sequence) -> list[LinExpr]:
    """Prefix sums of ``v`` sorted non-increasingly.

    Exact entries are sorted exactly.  If any entry is an opaque interval the
    k-th prefix sum is enclosed by the top-k sums of the lower and upper
    endpoints, which needs no ordering at all.
    """
    exact = [_as_exact(x) for x in v]
    if all(e is not None for e in exact):
        out, acc = [], LinExpr(0)
        for e in sort_desc(exact):
            acc = acc + e
            out.append(acc)
        return out
    los = sorted((x.lo if isinstance(x, RootEnclosure) else _lo(x) for x in v), reverse=True)
    his = sorted((x.hi if isinstance(x, RootEnclosure) else _hi(x) for x in v), reverse=True)
    out = []
    for k in range(1, len(v) + 1):
        out.append(LinExpr(0, None, (sum(los[:k]), sum(his[:k]))))
    return out


def _lo(x) -> Fraction:
    e = _as_exact(x)
    return e.enclosure(DEFAULT_EPS)[0]


def _hi(x) -> Fraction:
    e = _as_exact(x)
    return e.enclosure(DEFAULT_EPS)[1]


def majorizes(x: Sequence, y: Sequence, eps: RatLike = DEFAULT_EPS) -> Trilean:
    """Certified verdict on ``y ≺ x`` (``x`` majorizes ``y``) via partial sums."""
    if len(x) != len(y):
        raise LengthMismatch(f"lengths {len(x)} and {len(y)} differ")
    eps = as_rat(eps)
    if not len(x):
        return Trilean(True)
    sx, sy = _sorted_prefix_sums(x), _sorted_prefix_sums(y)
    return majorizes_prefix(sx, sy, eps)


def majorizes_prefix(sx: Sequence[LinExpr], sy: Sequence[LinExpr], eps: Fraction) -> Trilean:
    """``y ≺ x`` from already-computed sorted prefix sums (last entry = total)."""
    verdicts = []
    for k in range(len(sx) - 1):
        v = certify_le(sy[k], sx[k], eps)
        if v.is_false:
            return FALSE
        verdicts.append(v)
    v = certify_eq(sy[-1], sx[-1], eps)
    if v.is_false:
        return FALSE
    verdicts.append(v)
    return all_of(verdicts)


def pinch(x: Sequence[RatLike], j: int, k: int, alpha: RatLike) -> tuple[Fraction, ...]:
    """Move coordinates ``j`` and ``k`` (1-based, ``x_j >= x_k``) towards each other by ``alpha``."""
    xs = [as_rat(v) for v in x]
    n = len(xs)
    if not (1 <= j <= n and 1 <= k <= n) or j == k:
        raise IndexOutOfRange(f"pinch indices ({j}, {k}) invalid for length {n}")
    alpha = as_rat(alpha)
    a, b = xs[j - 1], xs[k - 1]
    if a < b:
        raise CrossingPinch(f"need x_j >= x_k, got {a} < {b}")
    if not 0 <= alpha <= (a - b) / 2:
        raise CrossingPinch(f"alpha={alpha} outside [0, {(a - b) / 2}]")
    xs[j - 1] = a - alpha
    xs[k - 1] = b + alpha
    return tuple(xs)


# ---------------------------------------------------------------------------
# index tuples and Horn triples


@dataclass(frozen=True)
class IndexTuple:
    """Index sets ``I, L, J, K`` (1-based, sorted) for Horn-type inequalities."""

    n: int
    I: tuple[int, ...]
    J: tuple[int, ...]
    K: tuple[int, ...]
    L: tuple[int, ...] | None = None

    def __post_init__(self):
        for name in ("I", "J", "K", "L"):
            s = getattr(self, name)
            if s is None:
                continue
            s = tuple(sorted(int(v) for v in s))
            object.__setattr__(self, name, s)
            if name != "L" and not s:
                raise IndexOutOfRange(f"{name} must be non-empty")
            if any(not 1 <= v <= self.n for v in s):
                raise IndexOutOfRange(f"{name}={s} not inside [1, {self.n}]")
            if len(set(s)) != len(s):
                raise IndexOutOfRange(f"{name}={s} has repeated indices")

    @property
    def triple(self) -> tuple:
        return (self.I, self.J, self.K)

    def with_L(self, L: Iterable[int]) -> IndexTuple:
        return IndexTuple(self.n, self.I, self.J, self.K, tuple(L))

    def to_json(self) -> dict:
        out = {"n": self.n, "I": list(self.I), "J": list(self.J), "K": list(self.K)}
        if self.L is not None:
            out["L"] = list(self.L)
        return out

    @classmethod
    def from_json(cls, obj: dict) -> IndexTuple:
        try:
            L = obj.get("L")
            return cls(int(obj["n"]), tuple(obj["I"]), tuple(obj["J"]), tuple(obj["K"]),
                       tuple(L) if L is not None else None)
        except (KeyError, TypeError) as exc:
            raise ParseError(f"malformed index tuple JSON: {obj!r}") from exc


def _subsets(n: int, r: int) -> list[tuple[int, ...]]:
    return list(itertools.combinations(range(1, n + 1), r))


@lru_cache(maxsize=None)
def _fulton_T(n: int, r: int) -> frozenset:
    """Horn's recursive set ``T^n_r`` in the Fulton convention.

    ``(I, J, K)`` in the set means ``sum_K c_k <= sum_I a_i + sum_J b_j`` for
    the decreasing eigenvalues ``a, b, c`` of ``A, B, C = A + B``.
    """
    target = r * (r + 1) // 2
    subs = _subsets(n, r)
    lower = [(p, _fulton_T(r, p)) for p in range(1, r)]
    out = set()
    for I in subs:
        si = sum(I)
        for J in subs:
            sj = sum(J)
            for K in subs:
                if si + sj != sum(K) + target:
                    continue
                ok = True
                for p, tp in lower:
                    tri = p * (p + 1) // 2
                    for F, G, H in tp:
                        if (sum(I[f - 1] for f in F) + sum(J[g - 1] for g in G)
                                > sum(K[h - 1] for h in H) + tri):
                            ok = False
                            break
                    if not ok:
                        break
                if ok:
                    out.add((I, J, K))
    return frozenset(out)


def _dominated(tri, base) -> bool:
    # orientation (I, J, K): larger I-indices and smaller J/K-indices weaken the inequality
    I, J, K = tri
    bI, bJ, bK = base
    return (all(a >= b for a, b in zip(I, bI)) and all(a <= b for a, b in zip(J, bJ))
            and all(a <= b for a, b in zip(K, bK)))


@lru_cache(maxsize=None)
def _horn_triples(n: int, r: int) -> frozenset:
    # Fulton (I, J, K) -> ours (K, I, J): sum_I lam(A+B) <= sum_J lam(A) + sum_K lam(B)
    base = [(K, I, J) for I, J, K in _fulton_T(n, r)]
    subs = _subsets(n, r)
    out = set()
    for tri in itertools.product(subs, repeat=3):
        if any(_dominated(tri, b) for b in base):
            out.add(tri)
    return frozenset(out)


def horn_triples(n: int, r: int) -> set[IndexTuple]:
    """All ``(I, J, K)`` with ``|I| = |J| = |K| = r`` giving a valid eigenvalue inequality.

    The inequality reads ``sum_I lam(A+B) <= sum_J lam(A) + sum_K lam(B)``
    with eigenvalues in non-increasing order.  The result is Horn's recursive
    set ``T^n_r`` together with every triple it implies through monotonicity
    of ordered eigenvalues; for ``r = 1`` this is exactly ``{i >= j + k - 1}``.
    """
    if not 1 <= r <= n:
        raise IndexOutOfRange(f"need 1 <= r <= n, got r={r}, n={n}")
    if n > HORN_MAX_N:
        raise UnsupportedSize(f"Horn triples only supported for n <= {HORN_MAX_N}")
    return {IndexTuple(n, I, J, K) for I, J, K in _horn_triples(n, r)}


def is_horn_triple(t: IndexTuple) -> bool:
    if not (len(t.I) == len(t.J) == len(t.K)):
        return False
    return (t.I, t.J, t.K) in _horn_triples(t.n, len(t.I))


# ---------------------------------------------------------------------------
# exact eigenvalues of rational symmetric matrices


def charpoly(m: Sequence[Sequence[RatLike]]) -> RatPoly:
    """Characteristic polynomial ``det(t I - M)`` by Faddeev-LeVerrier, exactly."""
    a = [[as_rat(v) for v in row] for row in m]
    n = len(a)
    coeffs = [Fraction(0)] * (n + 1)
    coeffs[n] = Fraction(1)
    am = [[Fraction(0)] * n for _ in range(n)]  # A M_{k-1}, with M_0 = 0
    for k in range(1, n + 1):
        # M_k = A M_{k-1} + c_{n-k+1} I ;  c_{n-k} = -tr(A M_k) / k
        mk = [row[:] for row in am]
        for i in range(n):
            mk[i][i] += coeffs[n - k + 1]
        am = [[sum(a[i][t] * mk[t][j] for t in range(n)) for j in range(n)] for i in range(n)]
        coeffs[n - k] = -sum(am[i][i] for i in range(n)) / k
    return RatPoly(coeffs, n)


def exact_eigenvalues(m: Sequence[Sequence[RatLike]]) -> list[RealAlgebraic]:
    """Eigenvalues of a rational symmetric matrix, non-increasing, exact."""
    a = [[as_rat(v) for v in row] for row in m]
    n = len(a)
    if any(a[i][j] != a[j][i] for i in range(n) for j in range(n)):
        raise ValueError("matrix must be symmetric")
    return real_roots(charpoly(a))


def triple_slack(t: IndexTuple, lam_c, lam_a, lam_b) -> LinExpr:
    """``sum_J lam_a + sum_K lam_b - sum_I lam_c`` as an exact expression."""
    rhs = sum((LinExpr.of(lam_a[j - 1]) for j in t.J), LinExpr(0))
    rhs = rhs + sum((LinExpr.of(lam_b[k - 1]) for k in t.K), LinExpr(0))
    lhs = sum((LinExpr.of(lam_c[i - 1]) for i in t.I), LinExpr(0))
    return rhs - lhs


def verify_matrix_triple(t: IndexTuple, a, b, eps: RatLike = DEFAULT_EPS) -> Trilean:
    """Exact verdict of the triple inequality for rational symmetric ``a, b``."""
    ab = [[as_rat(x) + as_rat(y) for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]
    lc, la, lb = exact_eigenvalues(ab), exact_eigenvalues(a), exact_eigenvalues(b)
    expr = triple_slack(t, lc, la, lb)
    return certify_le(LinExpr(0), expr, as_rat(eps))


# ---------------------------------------------------------------------------
# sampling oracle


RNG_ALGORITHM = "numpy.PCG64/SeedSequence(seed, spawn_key=(chunk,))"
_CHUNK = 512


def _chunk_rng(seed: int, chunk: int) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(np.random.SeedSequence(seed, spawn_key=(chunk,))))


def _sample_pairs(rng: np.random.Generator, count: int, n: int) -> tuple[np.ndarray, np.ndarray]:
    """Integer symmetric matrices of three flavours: dense, diagonal, rank one."""
    def draw(kind):
        if kind == 0:
            m = rng.integers(-4, 5, size=(count, n, n))
            return np.triu(m) + np.transpose(np.triu(m, 1), (0, 2, 1))
        if kind == 1:
            d = rng.integers(-4, 5, size=(count, n))
            return np.einsum("bi,ij->bij", d, np.eye(n, dtype=np.int64))
        v = rng.integers(-3, 4, size=(count, n))
        s = rng.choice(np.array([-1, 1]), size=(count, 1, 1))
        return s * np.einsum("bi,bj->bij", v, v)

    kinds = rng.integers(0, 3, size=2)
    return draw(kinds[0]), draw(kinds[1])


def hermitian_falsify(t: IndexTuple, trials: int, seed: int = 0):
    """Search for symmetric ``A, B`` violating the triple inequality of ``t``.

    Screening uses floating-point eigenvalues with tolerance ``1e-8``; any hit
    is re-verified exactly on the same integer matrices, and only certified
    violations are returned as ``(A, B)`` lists of integer rows.  Trials are
    drawn in fixed-size chunks, each from its own spawned seed, so the
    outcome depends only on ``(t, trials, seed)``.
    """
    if trials < 1:
        raise ValueError("trials must be >= 1")
    n = t.n
    I = np.array(t.I) - 1
    J = np.array(t.J) - 1
    K = np.array(t.K) - 1
    done = 0
    chunk = 0
    while done < trials:
        count = min(_CHUNK, trials - done)
        rng = _chunk_rng(seed, chunk)
        A, B = _sample_pairs(rng, _CHUNK, n)
        A, B = A[:count], B[:count]
        ev = lambda m: np.linalg.eigvalsh(m.astype(float))[:, ::-1]
        lc, la, lb = ev(A + B), ev(A), ev(B)
        gap = lc[:, I].sum(axis=1) - la[:, J].sum(axis=1) - lb[:, K].sum(axis=1)
        for idx in np.flatnonzero(gap > FALSIFY_TOL):
            a = A[idx].tolist()
            b = B[idx].tolist()
            if verify_matrix_triple(t, a, b).is_false:
                return a, b
        done += count
        chunk += 1
    return None
