"""Certified real roots of rational polynomials.

Every real root handled here is an exact real algebraic number: an index
into the sorted real roots of a squarefree integer polynomial, plus a
rational offset.  The polynomial is normalised to be *depressed* (roots sum
to zero), primitive and with positive leading coefficient, so shifted copies
of the same polynomial share one canonical key.  That lets comparisons cancel
identical roots symbolically before touching intervals.

Enclosures are produced by Sturm-sequence isolation followed by bisection,
in exact rational arithmetic throughout.  Comparisons that cannot be decided
at a requested width come back as :class:`Trilean` ``Indeterminate`` values
carrying the width reached.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cmp_to_key, lru_cache, reduce
from typing import Iterable, Mapping, Sequence

from .errors import (
    DegreeExceedsAmbient,
    DegreeMismatch,
    DegreeZero,
    EndpointIsRoot,
    NonpositiveOmega,
    NotRealRooted,
    ZeroPolynomial,
)
from .poly import (
    RatLike,
    RatPoly,
    as_rat,
    derivative,
    poly_gcd,
    rat_to_str,
    root_mean,
    shift,
    squarefree_decomposition,
    squarefree_part,
)

DEFAULT_EPS = Fraction(1, 2**40)

Key = tuple  # primitive integer coefficients, low degree first

_LINEAR_KEY: Key = (0, 1)  # the polynomial x: its only root is 0


# ---------------------------------------------------------------------------
# three-valued logic


@dataclass(frozen=True)
class Trilean:
    """True, False, or Indeterminate at a recorded interval width."""

    value: bool | None
    width: Fraction | None = None

    @classmethod
    def indeterminate(cls, width: Fraction) -> Trilean:
        return cls(None, Fraction(width))

    @property
    def is_true(self) -> bool:
        return self.value is True

    @property
    def is_false(self) -> bool:
        return self.value is False

    @property
    def is_indeterminate(self) -> bool:
        return self.value is None

    def __bool__(self) -> bool:
        raise TypeError("Trilean has no implicit truth value; use .is_true / .is_false")

    def __and__(self, other: Trilean) -> Trilean:
        return all_of([self, other])

    def __invert__(self) -> Trilean:
        if self.value is None:
            return self
        return TRUE if self.value is False else FALSE

    def to_json(self):
        if self.value is True:
            return "true"
        if self.value is False:
            return "false"
        return {"indeterminate": rat_to_str(self.width)}

    @classmethod
    def from_json(cls, obj) -> Trilean:
        if obj == "true":
            return TRUE
        if obj == "false":
            return FALSE
        return cls.indeterminate(Fraction(obj["indeterminate"]))

    def __repr__(self) -> str:
        if self.value is None:
            return f"Indeterminate({self.width})"
        return "True" if self.value else "False"


TRUE = Trilean(True)
FALSE = Trilean(False)


def all_of(verdicts: Iterable[Trilean]) -> Trilean:
    """Conjunction: False dominates, then Indeterminate (widest width kept)."""
    width = None
    for v in verdicts:
        if v.is_false:
            return FALSE
        if v.is_indeterminate:
            width = v.width if width is None else max(width, v.width)
    return TRUE if width is None else Trilean.indeterminate(width)


# ---------------------------------------------------------------------------
# integer-polynomial kernels


def _int_scaled(p: RatPoly) -> tuple[int, ...]:
    """Integer coefficients of ``c * p`` for some rational ``c > 0``."""
    den = reduce(math.lcm, (c.denominator for c in p.coeffs), 1)
    ints = [int(c * den) for c in p.coeffs]
    g = reduce(math.gcd, ints, 0) or 1
    return tuple(v // g for v in ints)


def _sign_at(f: Sequence[int], x: Fraction) -> int:
    a, b = x.numerator, x.denominator
    acc = f[-1]
    bp = 1
    for c in reversed(f[:-1]):
        bp *= b
        acc = acc * a + c * bp
    return (acc > 0) - (acc < 0)


def _cauchy_bound(f: Sequence[int]) -> Fraction:
    """A power of two strictly above the modulus of every root."""
    lc = abs(f[-1])
    bound = 1 + Fraction(max((abs(c) for c in f[:-1]), default=0), lc)
    b = Fraction(1)
    while b < bound:
        b *= 2
    return b


@lru_cache(maxsize=8192)
def _sturm_sequence(f: Key) -> tuple[tuple[int, ...], ...]:
    p = RatPoly(f)
    seq = [p, derivative(p, 1)]
    while not seq[-1].is_zero() and seq[-1].degree > 0:
        r = seq[-2] % seq[-1]
        if r.is_zero():
            break
        seq.append(-r)
    return tuple(_int_scaled(s) for s in seq if not s.is_zero())


def _variations(seq: Sequence[Sequence[int]], x: Fraction) -> int:
    last = 0
    v = 0
    for s in seq:
        sg = _sign_at(s, x)
        if sg:
            if last and sg != last:
                v += 1
            last = sg
    return v


def simplest_between(lo: Fraction, hi: Fraction) -> Fraction:
    """The rational with smallest denominator in ``[lo, hi]``."""
    if lo > hi:
        lo, hi = hi, lo
    if lo <= 0 <= hi:
        return Fraction(0)
    if hi < 0:
        return -simplest_between(-hi, -lo)
    fl = math.floor(lo)
    if fl == lo:
        return Fraction(fl)
    if fl + 1 <= hi:
        return Fraction(fl + 1)
    return fl + 1 / simplest_between(1 / (hi - fl), 1 / (lo - fl))


class _Slot:
    """Mutable enclosure state of one root, owned by the isolation cache.

    Refinement only ever shrinks ``iv`` around a fixed number, and ``iv`` is
    replaced as a whole tuple, so concurrent refiners can only lose work.
    """

    __slots__ = ("iv", "rational_checked")

    def __init__(self, lo: Fraction, hi: Fraction):
        self.iv = (lo, hi)
        self.rational_checked = lo == hi


def _split_point(f: Key, lo: Fraction, hi: Fraction) -> Fraction:
    for num, den in ((1, 2), (1, 3), (2, 3), (1, 4), (3, 4), (2, 5), (3, 5)):
        m = lo + (hi - lo) * num / den
        if _sign_at(f, m):
            return m
    k = 7
    while True:
        m = lo + (hi - lo) / k
        if _sign_at(f, m):
            return m
        k += 1


@lru_cache(maxsize=8192)
def _isolate(f: Key) -> tuple[_Slot, ...]:
    """Isolating intervals of the real roots of squarefree ``f``, descending.

    Each interval ``(lo, hi)`` has non-root endpoints and contains exactly
    one root, or is a degenerate exact point.
    """
    d = len(f) - 1
    if d == 1:
        r = Fraction(-f[0], f[1])
        return (_Slot(r, r),)
    seq = _sturm_sequence(f)
    b = _cauchy_bound(f)
    found = []
    stack = [(-b, b, _variations(seq, -b), _variations(seq, b))]
    while stack:
        lo, hi, vlo, vhi = stack.pop()
        cnt = vlo - vhi
        if cnt == 0:
            continue
        if cnt == 1:
            found.append(_Slot(lo, hi))
            continue
        m = _split_point(f, lo, hi)
        vm = _variations(seq, m)
        stack.append((lo, m, vlo, vm))
        stack.append((m, hi, vm, vhi))
    found.sort(key=lambda s: s.iv[0], reverse=True)
    return tuple(found)


def _refine(f: Key, slot: _Slot, width: Fraction) -> tuple[Fraction, Fraction]:
    lo, hi = slot.iv
    if hi - lo <= width:
        return lo, hi
    slo = _sign_at(f, lo)
    while hi - lo > width:
        m = (lo + hi) / 2
        s = _sign_at(f, m)
        if s == 0:
            lo = hi = m
            break
        if s == slo:
            lo = m
        else:
            hi = m
    if lo != hi:
        q = simplest_between(lo, hi)
        if _sign_at(f, q) == 0:
            lo = hi = q
    cur_lo, cur_hi = slot.iv
    lo, hi = max(lo, cur_lo), min(hi, cur_hi)
    slot.iv = (lo, hi)
    if lo == hi:
        slot.rational_checked = True
    return lo, hi


_RATIONAL_CHECK_MAX_BITS = 512


def _resolve_rational(f: Key, slot: _Slot) -> None:
    """Decide once whether the isolated root is rational.

    A rational root ``a/b`` of a primitive integer polynomial has ``b`` dividing
    the leading coefficient ``L``.  Distinct fractions with denominators at
    most ``L`` are ``1/L**2`` apart, so at that width the simplest rational in
    the interval is the root if the root is rational at all.
    """
    if slot.rational_checked:
        return
    lbits = abs(f[-1]).bit_length()
    bits = 2 * lbits + 2
    if bits <= _RATIONAL_CHECK_MAX_BITS:
        _refine(f, slot, Fraction(1, 2**bits))
        lo, hi = slot.iv
        if lo != hi:
            q = simplest_between(lo, hi)
            if _sign_at(f, q) == 0:
                slot.iv = (q, q)
    slot.rational_checked = True


# ---------------------------------------------------------------------------
# exact real algebraic numbers


@dataclass(frozen=True)
class RealAlgebraic:
    """``offset + (index-th largest real root of key)``, exactly."""

    key: Key
    index: int
    offset: Fraction

    @classmethod
    def rational(cls, x: RatLike) -> RealAlgebraic:
        return cls(_LINEAR_KEY, 0, as_rat(x))

    def _slot(self) -> _Slot:
        return _isolate(self.key)[self.index]

    @property
    def is_exact(self) -> bool:
        lo, hi = self._slot().iv
        return lo == hi

    def exact_value(self) -> Fraction | None:
        """The rational value if the root is known (or provably) rational."""
        if self.key == _LINEAR_KEY:
            return self.offset
        slot = self._slot()
        _resolve_rational(self.key, slot)
        lo, hi = slot.iv
        return lo + self.offset if lo == hi else None

    def enclosure(self, width: Fraction) -> tuple[Fraction, Fraction]:
        if self.key == _LINEAR_KEY:
            return self.offset, self.offset
        lo, hi = _refine(self.key, self._slot(), width)
        return lo + self.offset, hi + self.offset

    def __float__(self) -> float:
        lo, hi = self.enclosure(Fraction(1, 2**60))
        return float((lo + hi) / 2)

    def __repr__(self) -> str:
        if self.key == _LINEAR_KEY:
            return f"RealAlgebraic({self.offset})"
        return f"RealAlgebraic(root {self.index} of {list(self.key)} + {self.offset})"


def _key_poly(key: Key, delta: Fraction = Fraction(0)) -> RatPoly:
    """``key(x - delta)``: the polynomial whose roots are the key's roots plus delta."""
    p = RatPoly(key)
    return shift(p, -delta) if delta else p


def _count_in(g: RatPoly, lo: Fraction, hi: Fraction) -> int:
    if lo == hi:
        return int(g(lo) == 0)
    gi = _int_scaled(g)
    seq = _sturm_sequence(gi) if g.degree > 0 else (gi,)
    # g's endpoints are never roots here (see callers), so plain Sturm applies
    return _variations(seq, lo) - _variations(seq, hi)


def _algebraic_equal(a: RealAlgebraic, b: RealAlgebraic) -> bool:
    """Exact equality test via a common factor with a root in both enclosures."""
    if a.key == b.key and a.index == b.index:
        return a.offset == b.offset
    va, vb = a.exact_value(), b.exact_value()
    if va is not None and vb is not None:
        return va == vb
    alo, ahi = a._slot().iv if a.key != _LINEAR_KEY else (Fraction(0), Fraction(0))
    blo, bhi = b._slot().iv if b.key != _LINEAR_KEY else (Fraction(0), Fraction(0))
    # move b into a's frame: b's bare root beta equals alpha iff beta + d is alpha
    d = b.offset - a.offset
    lo, hi = max(alo, blo + d), min(ahi, bhi + d)
    if lo > hi:
        return False
    g = poly_gcd(_key_poly(a.key), _key_poly(b.key, d))
    if g.degree < 1:
        return False
    if lo == hi:
        return g(lo) == 0
    return _count_in(g, lo, hi) >= 1


def compare(a: RealAlgebraic, b: RealAlgebraic) -> int:
    """Exact three-way comparison (``-1``, ``0``, ``1``) of two real algebraic numbers."""
    if a.key == b.key and a.index == b.index:
        return (a.offset > b.offset) - (a.offset < b.offset)
    w = Fraction(1, 16)
    checked_equal = False
    while True:
        alo, ahi = a.enclosure(w)
        blo, bhi = b.enclosure(w)
        if ahi < blo:
            return -1
        if alo > bhi:
            return 1
        if alo == ahi and blo == bhi:
            return 0
        if not checked_equal:
            if _algebraic_equal(a, b):
                return 0
            checked_equal = True
        w /= 16


def sort_desc(values: Iterable[RealAlgebraic]) -> list[RealAlgebraic]:
    return sorted(values, key=cmp_to_key(lambda x, y: compare(y, x)))


# ---------------------------------------------------------------------------
# linear combinations of algebraic numbers


class LinExpr:
    """``const + sum(coef * atom) + [slack_lo, slack_hi]`` with exact coefficients.

    Atoms are ``(key, index)`` pairs; the slack interval absorbs opaque
    enclosures whose exact value is unknown.
    """

    __slots__ = ("const", "terms", "slack")

    def __init__(
        self,
        const: RatLike = 0,
        terms: Mapping[tuple, Fraction] | None = None,
        slack: tuple[Fraction, Fraction] = (Fraction(0), Fraction(0)),
    ):
        self.const = as_rat(const)
        self.terms = {k: Fraction(v) for k, v in (terms or {}).items() if v}
        self.slack = slack

    @classmethod
    def of(cls, x) -> LinExpr:
        if isinstance(x, LinExpr):
            return x
        if isinstance(x, RealAlgebraic):
            if x.key == _LINEAR_KEY:
                return cls(x.offset)
            return cls(x.offset, {(x.key, x.index): Fraction(1)})
        if isinstance(x, RootEnclosure):
            if x.value is not None:
                return cls.of(x.value)
            if x.lo == x.hi:
                return cls(x.lo)
            return cls(0, None, (x.lo, x.hi))
        return cls(as_rat(x))

    def __add__(self, other) -> LinExpr:
        other = LinExpr.of(other)
        terms = dict(self.terms)
        for k, v in other.terms.items():
            terms[k] = terms.get(k, 0) + v
        slack = (self.slack[0] + other.slack[0], self.slack[1] + other.slack[1])
        return LinExpr(self.const + other.const, terms, slack)

    __radd__ = __add__

    def __neg__(self) -> LinExpr:
        return LinExpr(
            -self.const,
            {k: -v for k, v in self.terms.items()},
            (-self.slack[1], -self.slack[0]),
        )

    def __sub__(self, other) -> LinExpr:
        return self + (-LinExpr.of(other))

    def __rsub__(self, other) -> LinExpr:
        return LinExpr.of(other) - self

    def __mul__(self, c: RatLike) -> LinExpr:
        c = as_rat(c)
        s = (self.slack[0] * c, self.slack[1] * c)
        return LinExpr(self.const * c, {k: v * c for k, v in self.terms.items()}, (min(s), max(s)))

    __rmul__ = __mul__

    def bounds(self, width: Fraction) -> tuple[Fraction, Fraction]:
        lo = hi = self.const
        for (key, idx), c in self.terms.items():
            a, b = RealAlgebraic(key, idx, Fraction(0)).enclosure(width)
            if c > 0:
                lo += c * a
                hi += c * b
            else:
                lo += c * b
                hi += c * a
        return lo + self.slack[0], hi + self.slack[1]

    def _use_root_sums(self) -> LinExpr:
        """Drop the most common coefficient across all roots of each key.

        Keys are depressed, so their roots sum to zero and
        ``sum_i c_i a_i = sum_i (c_i - c) a_i`` for any ``c``.
        """
        by_key: dict[Key, dict[int, Fraction]] = {}
        for (key, idx), c in self.terms.items():
            by_key.setdefault(key, {})[idx] = c
        terms = dict(self.terms)
        for key, coeffs in by_key.items():
            deg = len(key) - 1
            if len(coeffs) < (deg + 1) // 2 or deg < 2:
                continue
            full = [coeffs.get(i, Fraction(0)) for i in range(deg)]
            c = max(set(full), key=lambda v: (full.count(v), v == 0))
            if c == 0:
                continue
            for i in range(deg):
                terms[(key, i)] = full[i] - c
        return LinExpr(self.const, terms, self.slack)

    def _merge_equal_atoms(self) -> LinExpr:
        atoms = list(self.terms.items())
        merged: list[list] = []
        for k, c in atoms:
            x = RealAlgebraic(k[0], k[1], Fraction(0))
            for slot in merged:
                y = slot[0]
                if y.key != x.key and _algebraic_equal(x, y):
                    slot[1] += c
                    break
            else:
                merged.append([x, c])
        terms = {(x.key, x.index): c for x, c in merged}
        return LinExpr(self.const, terms, self.slack)

    def _substitute_rationals(self) -> LinExpr:
        const = self.const
        terms = {}
        for (key, idx), c in self.terms.items():
            v = RealAlgebraic(key, idx, Fraction(0)).exact_value()
            if v is None:
                terms[(key, idx)] = c
            else:
                const += c * v
        return LinExpr(const, terms, self.slack)

    def __repr__(self) -> str:
        return f"LinExpr({self.const}, {len(self.terms)} atoms, slack={self.slack})"


def _width_schedule(eps: Fraction) -> list[Fraction]:
    out = []
    bits = 8
    while Fraction(1, 2**bits) > eps:
        out.append(Fraction(1, 2**bits))
        bits *= 2
    out.append(eps)
    return out


def certify_nonneg(expr, eps: Fraction = DEFAULT_EPS) -> Trilean:
    """Certify ``expr >= 0``."""
    expr = LinExpr.of(expr)
    eps = as_rat(eps)
    if len(expr.terms) > 1:
        expr = expr._use_root_sums()._merge_equal_atoms()
    lo = hi = None
    for stage in range(2):
        if not expr.terms:
            lo, hi = expr.bounds(eps)
            if lo >= 0:
                return TRUE
            if hi < 0:
                return FALSE
            return Trilean.indeterminate(hi - lo)
        for w in _width_schedule(eps):
            lo, hi = expr.bounds(w)
            if lo >= 0:
                return TRUE
            if hi < 0:
                return FALSE
        if stage == 0:
            expr = expr._substitute_rationals()
    return Trilean.indeterminate(hi - lo)


def certify_le(lhs, rhs, eps: Fraction = DEFAULT_EPS) -> Trilean:
    """Certify ``lhs <= rhs``."""
    return certify_nonneg(LinExpr.of(rhs) - LinExpr.of(lhs), eps)


def certify_eq(lhs, rhs, eps: Fraction = DEFAULT_EPS) -> Trilean:
    """Certify ``lhs == rhs``: True only if exact after cancellation."""
    diff = LinExpr.of(lhs) - LinExpr.of(rhs)
    if len(diff.terms) > 1:
        diff = diff._use_root_sums()._merge_equal_atoms()
    diff = diff._substitute_rationals()
    if not diff.terms and diff.slack == (0, 0):
        return TRUE if diff.const == 0 else FALSE
    lo, hi = diff.bounds(eps)
    if lo > 0 or hi < 0:
        return FALSE
    return Trilean.indeterminate(hi - lo)


# ---------------------------------------------------------------------------
# enclosures and root vectors


@dataclass(frozen=True)
class RootEnclosure:
    lo: Fraction
    hi: Fraction
    multiplicity: int = 1
    value: RealAlgebraic | None = field(default=None, compare=False, repr=False)

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    @property
    def is_exact(self) -> bool:
        return self.lo == self.hi

    def to_json(self) -> dict:
        return {"lo": rat_to_str(self.lo), "hi": rat_to_str(self.hi), "mult": self.multiplicity}

    @classmethod
    def from_json(cls, obj: dict) -> RootEnclosure:
        return cls(Fraction(obj["lo"]), Fraction(obj["hi"]), int(obj["mult"]))


@dataclass(frozen=True)
class RootVector:
    """Non-increasing roots, one entry per root counted with multiplicity."""

    entries: tuple[RootEnclosure, ...]
    shared_ordering: bool = False

    @property
    def width(self) -> Fraction:
        return max((e.width for e in self.entries), default=Fraction(0))

    @property
    def values(self) -> list[RealAlgebraic]:
        return [e.value for e in self.entries]

    def __len__(self) -> int:
        return len(self.entries)

    def __getitem__(self, i):
        return self.entries[i]

    def __iter__(self):
        return iter(self.entries)

    def to_json(self) -> list:
        return [e.to_json() for e in self.entries]


def _enclose(v: RealAlgebraic, mult: int, eps: Fraction) -> RootEnclosure:
    ev = v.exact_value()
    if ev is not None:
        return RootEnclosure(ev, ev, mult, v)
    lo, hi = v.enclosure(eps)
    return RootEnclosure(lo, hi, mult, v)


def _require_nonzero(p: RatPoly) -> None:
    if p.is_zero():
        raise ZeroPolynomial("operation undefined for the zero polynomial")


def sturm_count(p: RatPoly, lo: RatLike, hi: RatLike) -> int:
    """Number of distinct real roots of ``p`` in ``(lo, hi]``."""
    _require_nonzero(p)
    lo, hi = as_rat(lo), as_rat(hi)
    if not lo < hi:
        raise ValueError("need lo < hi")
    if p(lo) == 0 or p(hi) == 0:
        raise EndpointIsRoot(f"endpoint is a root of {p}")
    if p.degree < 1:
        return 0
    seq = _sturm_sequence(squarefree_part(p).primitive())
    return _variations(seq, lo) - _variations(seq, hi)


def is_real_rooted(p: RatPoly) -> bool:
    """Exact decision: every complex root of ``p`` is real."""
    _require_nonzero(p)
    if p.degree < 1:
        return True
    f = squarefree_part(p).primitive()
    seq = _sturm_sequence(f)
    b = _cauchy_bound(f)
    return _variations(seq, -b) - _variations(seq, b) == len(f) - 1


@lru_cache(maxsize=4096)
def _factor_roots(f: RatPoly) -> tuple[RealAlgebraic, ...]:
    """Real roots of a squarefree factor, in its canonical depressed frame."""
    if f.degree == 1:
        return (RealAlgebraic.rational(-f.coeff(0) / f.coeff(1)),)
    m = root_mean(f)
    key = shift(f, m).primitive()
    return tuple(RealAlgebraic(key, i, m) for i in range(len(_isolate(key))))


@lru_cache(maxsize=4096)
def _real_roots_cached(p: RatPoly) -> tuple[tuple[RealAlgebraic, int], ...]:
    pairs = []
    total = 0
    for f, m in squarefree_decomposition(p):
        rs = _factor_roots(f)
        if len(rs) != f.degree:
            raise NotRealRooted(f"{p} has non-real roots")
        total += m * len(rs)
        pairs.extend((r, m) for r in rs)
    order = sorted(range(len(pairs)), key=cmp_to_key(lambda i, j: compare(pairs[j][0], pairs[i][0])))
    return tuple(pairs[i] for i in order)


def real_roots(p: RatPoly) -> list[RealAlgebraic]:
    """Exact roots of a real-rooted ``p``, non-increasing, repeated by multiplicity."""
    _require_nonzero(p)
    out = []
    for v, m in _real_roots_cached(p):
        out.extend([v] * m)
    return out


def top_root(p: RatPoly) -> RealAlgebraic:
    """Largest root of a real-rooted ``p``, without ordering the other roots."""
    _require_nonzero(p)
    if p.degree < 1:
        raise DegreeZero("constant polynomial has no roots")
    best = None
    for f, _ in squarefree_decomposition(p):
        rs = _factor_roots(f)
        if len(rs) != f.degree:
            raise NotRealRooted(f"{p} has non-real roots")
        if best is None or compare(rs[0], best) > 0:
            best = rs[0]
    return best


def root_vector(p: RatPoly, eps: RatLike = DEFAULT_EPS) -> RootVector:
    """Certified enclosures of width at most ``eps`` of all roots of ``p``."""
    eps = as_rat(eps)
    if eps <= 0:
        raise ValueError("eps must be positive")
    _require_nonzero(p)
    if not is_real_rooted(p):
        raise NotRealRooted(f"{p} is not real-rooted")
    entries = []
    for v, m in _real_roots_cached(p):
        enc = _enclose(v, m, eps)
        entries.extend([enc] * m)
    return RootVector(tuple(entries))


def padded_roots(p: RatPoly, n: int) -> list[RealAlgebraic]:
    """Exact ``lambda^n(p)``: roots padded with their mean up to length ``n``."""
    _require_nonzero(p)
    d = p.degree
    if d < 1:
        raise DegreeZero("padding needs at least one root")
    if d > n:
        raise DegreeExceedsAmbient(f"degree {d} exceeds {n}")
    if not is_real_rooted(p):
        raise NotRealRooted(f"{p} is not real-rooted")
    mean = RealAlgebraic.rational(root_mean(p))
    return sort_desc(real_roots(p) + [mean] * (n - d))


def padded_root_vector(p: RatPoly, n: int, eps: RatLike = DEFAULT_EPS) -> RootVector:
    eps = as_rat(eps)
    vals = padded_roots(p, n)
    return RootVector(tuple(_enclose(v, 1, eps) for v in vals))


def maxroot(p: RatPoly, eps: RatLike = DEFAULT_EPS) -> RootEnclosure:
    _require_nonzero(p)
    if p.degree < 1:
        raise DegreeZero("constant polynomial has no roots")
    if not is_real_rooted(p):
        raise NotRealRooted(f"{p} is not real-rooted")
    v, m = _real_roots_cached(p)[0]
    return _enclose(v, m, as_rat(eps))


def interlaces(q: RatPoly, p: RatPoly, eps: RatLike = DEFAULT_EPS) -> Trilean:
    """Certified ``q << p``: the roots of ``q`` interlace those of ``p`` from below."""
    eps = as_rat(eps)
    dq, dp = q.degree, p.degree
    if dq not in (dp, dp - 1):
        raise DegreeMismatch(f"deg q = {dq} must be deg p or deg p - 1 (deg p = {dp})")
    if q.lc <= 0 or p.lc <= 0:
        raise ValueError("interlacing needs positive leading coefficients")
    lq, lp = real_roots(q), real_roots(p)
    if len(lq) != dq or len(lp) != dp:
        raise NotRealRooted("interlacing needs real-rooted polynomials")
    checks = []
    for i in range(dq):
        checks.append(certify_le(lq[i], lp[i], eps))
        if i + 1 < dp:
            checks.append(certify_le(lp[i + 1], lq[i], eps))
    return all_of(checks)


def cauchy_inverse(p: RatPoly, omega: RatLike, eps: RatLike = DEFAULT_EPS) -> RootEnclosure:
    """Enclosure of the unique ``x > maxroot(p)`` with ``p'(x)/p(x) = omega``.

    Found by bisection on the strictly decreasing map ``x -> p'(x)/p(x)``
    above the largest root, independently of any root isolation of
    ``p - p'/omega``.
    """
    omega, eps = as_rat(omega), as_rat(eps)
    if omega <= 0:
        raise NonpositiveOmega("omega must be positive")
    _require_nonzero(p)
    d = p.degree
    if d < 1:
        raise DegreeZero("constant polynomial has no roots")
    if not is_real_rooted(p):
        raise NotRealRooted(f"{p} is not real-rooted")
    top = real_roots(p)[0]
    h = derivative(p, 1) - p * omega
    sgn = 1 if p.lc > 0 else -1

    def above(x: Fraction) -> int:
        # sign of p'(x)/p(x) - omega for x above the largest root
        v = h(x) * sgn
        return (v > 0) - (v < 0)

    w = Fraction(1, 16)
    lo = None
    while lo is None:
        rlo, rhi = top.enclosure(w)
        cand = rhi if rhi != rlo else rhi + w
        if p(cand) != 0 and above(cand) > 0:
            lo = cand
        elif above(cand) == 0:
            return RootEnclosure(cand, cand, 1)
        w /= 16
    hi = lo + Fraction(d) / omega
    while hi - lo > eps:
        mid = (lo + hi) / 2
        s = above(mid)
        if s == 0:
            return RootEnclosure(mid, mid, 1)
        if s > 0:
            lo = mid
        else:
            hi = mid
    q = simplest_between(lo, hi)
    if h(q) == 0:
        return RootEnclosure(q, q, 1)
    return RootEnclosure(lo, hi, 1)
