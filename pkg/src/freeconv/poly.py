"""Dense univariate polynomials over Q and the finite free additive convolution.

Coefficients are stored low degree first as :class:`fractions.Fraction`.
Every polynomial also remembers an *ambient degree* ``n``: the ``n`` of the
space of polynomials of degree at most ``n`` it is regarded as living in.
The ambient degree is bookkeeping only; equality and hashing look at the
coefficients alone.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import reduce
from typing import Iterable, Sequence, Union

from .errors import DegreeExceedsAmbient, ParseError, ZeroPolynomial

RatLike = Union[int, Fraction, str]


def as_rat(x: RatLike) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise TypeError("bool is not a rational")
    if isinstance(x, (int, str)):
        try:
            return Fraction(x)
        except ValueError as exc:
            raise ParseError(f"not a rational: {x!r}") from exc
    raise TypeError(f"cannot interpret {type(x).__name__} as an exact rational")


def rat_to_str(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


def _trim(coeffs: Iterable[Fraction]) -> tuple[Fraction, ...]:
    cs = list(coeffs)
    while cs and cs[-1] == 0:
        cs.pop()
    return tuple(cs)


@dataclass(frozen=True)
class RatPoly:
    """Polynomial ``sum(coeffs[i] * t**i)`` regarded as an element of R^n[t]."""

    coeffs: tuple[Fraction, ...]
    n: int = field(default=-1, compare=False)

    def __init__(self, coeffs: Iterable[RatLike] = (), n: int | None = None):
        cs = _trim(as_rat(c) for c in coeffs)
        deg = len(cs) - 1
        if n is None or n < 0:
            n = max(deg, 0)
        if deg > n:
            raise DegreeExceedsAmbient(f"degree {deg} exceeds ambient degree {n}")
        object.__setattr__(self, "coeffs", cs)
        object.__setattr__(self, "n", int(n))

    # -- construction -------------------------------------------------
    @classmethod
    def constant(cls, c: RatLike, n: int = 0) -> RatPoly:
        return cls([c], n)

    @classmethod
    def monomial(cls, k: int, c: RatLike = 1, n: int | None = None) -> RatPoly:
        return cls([0] * k + [c], n)

    def with_ambient(self, n: int) -> RatPoly:
        return RatPoly(self.coeffs, n)

    # -- basic queries -------------------------------------------------
    @property
    def degree(self) -> int:
        """Degree, with ``-1`` for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def lc(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def coeff(self, i: int) -> Fraction:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else Fraction(0)

    def __call__(self, x: RatLike) -> Fraction:
        x = as_rat(x)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __iter__(self):
        return iter(self.coeffs)

    # -- ring operations ----------------------------------------------
    def __add__(self, other: RatPoly | RatLike) -> RatPoly:
        other = _coerce(other)
        m = max(len(self.coeffs), len(other.coeffs))
        return RatPoly(
            (self.coeff(i) + other.coeff(i) for i in range(m)), max(self.n, other.n)
        )

    __radd__ = __add__

    def __neg__(self) -> RatPoly:
        return RatPoly((-c for c in self.coeffs), self.n)

    def __sub__(self, other: RatPoly | RatLike) -> RatPoly:
        return self + (-_coerce(other))

    def __rsub__(self, other: RatLike) -> RatPoly:
        return _coerce(other) - self

    def __mul__(self, other: RatPoly | RatLike) -> RatPoly:
        if not isinstance(other, RatPoly):
            a = as_rat(other)
            return RatPoly((a * c for c in self.coeffs), self.n)
        if self.is_zero() or other.is_zero():
            return RatPoly((), self.n + other.n)
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return RatPoly(out, self.n + other.n)

    __rmul__ = __mul__

    def __truediv__(self, other: RatLike) -> RatPoly:
        a = as_rat(other)
        return RatPoly((c / a for c in self.coeffs), self.n)

    def __pow__(self, k: int) -> RatPoly:
        out = RatPoly([1], 0)
        for _ in range(k):
            out = out * self
        return out

    def __divmod__(self, other: RatPoly) -> tuple[RatPoly, RatPoly]:
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = other.degree
        lc = other.lc
        quot = [Fraction(0)] * max(len(rem) - dq, 0)
        for k in range(len(rem) - 1 - dq, -1, -1):
            c = rem[k + dq] / lc
            quot[k] = c
            if c:
                for j, b in enumerate(other.coeffs):
                    rem[k + j] -= c * b
        return RatPoly(quot), RatPoly(rem[:dq] if dq > 0 else ())

    def __floordiv__(self, other: RatPoly) -> RatPoly:
        return divmod(self, other)[0]

    def __mod__(self, other: RatPoly) -> RatPoly:
        return divmod(self, other)[1]

    # -- normal forms --------------------------------------------------
    def monic(self) -> RatPoly:
        if self.is_zero():
            raise ZeroPolynomial("zero polynomial has no monic form")
        return self / self.lc

    def primitive(self) -> tuple[int, ...]:
        """Integer coefficient tuple with content 1 and positive leading coefficient."""
        if self.is_zero():
            raise ZeroPolynomial("zero polynomial has no primitive part")
        den = reduce(math.lcm, (c.denominator for c in self.coeffs), 1)
        ints = [int(c * den) for c in self.coeffs]
        g = reduce(math.gcd, ints, 0)
        sgn = 1 if ints[-1] > 0 else -1
        return tuple(sgn * v // g for v in ints)

    def to_primitive(self) -> RatPoly:
        return RatPoly(self.primitive(), self.n)

    # -- printing / serialization -------------------------------------
    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        terms = []
        for i in range(self.degree, -1, -1):
            c = self.coeffs[i]
            if not c:
                continue
            sign = "-" if c < 0 else "+"
            a = abs(c)
            mag = "" if (a == 1 and i > 0) else str(a)
            var = "" if i == 0 else ("x" if i == 1 else f"x^{i}")
            body = f"{mag}*{var}" if mag and var else (mag or var)
            terms.append((sign, body))
        head_sign, head = terms[0]
        out = ("-" if head_sign == "-" else "") + head
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out

    def to_json(self) -> dict:
        return {"n": self.n, "coeffs": [rat_to_str(c) for c in self.coeffs]}

    @classmethod
    def from_json(cls, obj: dict) -> RatPoly:
        try:
            return cls([as_rat(c) for c in obj["coeffs"]], int(obj["n"]))
        except (KeyError, TypeError) as exc:
            raise ParseError(f"malformed polynomial JSON: {obj!r}") from exc


def _coerce(x: RatPoly | RatLike) -> RatPoly:
    return x if isinstance(x, RatPoly) else RatPoly([x])


# ---------------------------------------------------------------------------
# constructors and elementary operators


def from_roots(roots: Sequence[RatLike]) -> RatPoly:
    """Monic polynomial with exactly the given multiset of roots."""
    out = [Fraction(1)]
    for r in roots:
        r = as_rat(r)
        nxt = [Fraction(0)] * (len(out) + 1)
        for i, c in enumerate(out):
            nxt[i + 1] += c
            nxt[i] -= r * c
        out = nxt
    return RatPoly(out, len(roots))


def derivative(p: RatPoly, k: int = 1) -> RatPoly:
    """``D^k p``; the ambient degree drops by ``k`` (floored at 0)."""
    if k < 0:
        raise ValueError("derivative order must be non-negative")
    cs = list(p.coeffs)
    for _ in range(k):
        cs = [i * c for i, c in enumerate(cs)][1:]
    return RatPoly(cs, max(p.n - k, 0))


def shift(p: RatPoly, a: RatLike) -> RatPoly:
    """``p(t + a)``, by Horner's rule in the shifted variable."""
    a = as_rat(a)
    out = RatPoly((), p.n)
    lin = RatPoly([a, 1])
    for c in reversed(p.coeffs):
        out = out * lin + c
    return out.with_ambient(p.n)


def scale_arg(p: RatPoly, a: RatLike) -> RatPoly:
    """``p(a t)``."""
    a = as_rat(a)
    return RatPoly((c * a**i for i, c in enumerate(p.coeffs)), p.n)


def boxplus(p: RatPoly, q: RatPoly, n: int) -> RatPoly:
    """Finite free additive convolution ``p ⊞_n q``.

    Computes ``(1/n!) * sum_k D^k p(t) * D^(n-k) q(0)``.  Since
    ``D^(n-k) q(0) = (n-k)! * q_(n-k)`` the sum only needs the coefficients
    of ``q``.
    """
    if n < 0:
        raise ValueError("ambient degree must be non-negative")
    if p.degree > n or q.degree > n:
        raise DegreeExceedsAmbient(
            f"degrees ({p.degree}, {q.degree}) exceed ambient degree {n}"
        )
    out = [Fraction(0)] * (n + 1)
    nfact = math.factorial(n)
    for k in range(n + 1):
        w = q.coeff(n - k)
        if not w:
            continue
        w = w * math.factorial(n - k)
        # D^k p has coefficient (i!/(i-k)!) p_i at t^(i-k)
        for i in range(k, len(p.coeffs)):
            c = p.coeffs[i]
            if c:
                out[i - k] += w * c * math.perm(i, k)
    return RatPoly((c / nfact for c in out), n)


def boxplus_many(polys: Sequence[RatPoly], n: int) -> RatPoly:
    """Left fold of :func:`boxplus`; the convolution is associative."""
    if not polys:
        return RatPoly.monomial(n, 1, n)
    acc = polys[0].with_ambient(n)
    for q in polys[1:]:
        acc = boxplus(acc, q, n)
    return acc


def u_alpha(n: int, alpha: RatLike) -> RatPoly:
    """``t^n - n*alpha*t^(n-1)``, the convolution kernel of ``1 - alpha*D``."""
    if n < 1:
        raise ValueError("n must be at least 1")
    alpha = as_rat(alpha)
    cs = [Fraction(0)] * (n + 1)
    cs[n] = Fraction(1)
    cs[n - 1] = -n * alpha
    return RatPoly(cs, n)


def apply_U_alpha(p: RatPoly, alpha: RatLike) -> RatPoly:
    """``(1 - alpha*D) p``."""
    alpha = as_rat(alpha)
    return (p - derivative(p, 1) * alpha).with_ambient(p.n)


def poly_gcd(a: RatPoly, b: RatPoly) -> RatPoly:
    """Monic gcd (zero if both inputs are zero)."""
    while not b.is_zero():
        a, b = b, a % b
    return a if a.is_zero() else a.monic()


def squarefree_part(p: RatPoly) -> RatPoly:
    """``p / gcd(p, p')`` as a primitive integer polynomial with positive lc."""
    if p.is_zero():
        raise ZeroPolynomial("squarefree part of the zero polynomial")
    if p.degree <= 0:
        return RatPoly([1], p.n)
    g = poly_gcd(p, derivative(p, 1))
    return (p // g).to_primitive().with_ambient(p.n)


def squarefree_decomposition(p: RatPoly) -> list[tuple[RatPoly, int]]:
    """Yun's algorithm: ``p = lc * prod f_i^i`` with pairwise coprime monic ``f_i``.

    Returns the non-constant factors as ``(f_i, i)`` pairs.
    """
    if p.is_zero():
        raise ZeroPolynomial("squarefree decomposition of the zero polynomial")
    if p.degree <= 0:
        return []
    out = []
    dp = derivative(p, 1)
    a = poly_gcd(p, dp)
    b = p // a
    c = dp // a
    d = c - derivative(b, 1)
    i = 1
    while b.degree > 0:
        a = poly_gcd(b, d)
        if a.degree > 0:
            out.append((a.monic(), i))
        b = b // a
        c = d // a
        d = c - derivative(b, 1)
        i += 1
    return out


def root_mean(p: RatPoly) -> Fraction:
    """Exact mean of the (complex) roots, ``-c_(d-1) / (d * c_d)``."""
    d = p.degree
    if d < 1:
        raise ZeroPolynomial("mean of roots needs degree >= 1")
    return -p.coeff(d - 1) / (d * p.lc)
