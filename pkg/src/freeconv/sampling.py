"""Seeded generators of random real-rooted test polynomials.

All randomness is derived from ``(seed, trial)`` through numpy's
``SeedSequence`` spawning, so trials can be run in any order or split
across workers without changing any drawn value.
"""

from __future__ import annotations

from fractions import Fraction

import numpy as np

from .poly import RatPoly, from_roots

RNG_ALGORITHM = "numpy.PCG64/SeedSequence(seed, spawn_key=(trial,))"

DISTRIBUTIONS = ("uniform", "clustered", "progression", "dominant", "ualpha", "repeated")


def trial_rng(seed: int, trial: int) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(np.random.SeedSequence(seed, spawn_key=(trial,))))


def _rat(rng: np.random.Generator, num: int, den: int) -> Fraction:
    return Fraction(int(rng.integers(-num, num + 1)), int(rng.integers(1, den + 1)))


def random_roots(
    rng: np.random.Generator, d: int, dist: str = "uniform", num: int = 6, den: int = 4
) -> list[Fraction]:
    """``d`` rational roots drawn from one of :data:`DISTRIBUTIONS`."""
    if d == 0:
        return []
    if dist == "uniform":
        return [_rat(rng, num, den) for _ in range(d)]
    if dist == "clustered":
        out = []
        while len(out) < d:
            c = _rat(rng, num, den)
            gap = Fraction(int(rng.integers(1, 4)), int(rng.integers(8, 65)))
            out.extend([c, c + gap][: d - len(out)])
        return out
    if dist == "progression":
        a = _rat(rng, num, den)
        step = Fraction(int(rng.integers(0, num + 1)), int(rng.integers(1, den + 1)))
        return [a + k * step for k in range(d)]
    if dist == "dominant":
        rest = [_rat(rng, 1, den) for _ in range(d - 1)]
        return [Fraction(int(rng.integers(num, 4 * num + 1)), int(rng.integers(1, den + 1)))] + rest
    if dist == "ualpha":
        c = _rat(rng, num, den)
        alpha = Fraction(int(rng.integers(1, num + 1)), int(rng.integers(1, den + 1)))
        return [c + d * alpha] + [c] * (d - 1)
    if dist == "repeated":
        vals = [_rat(rng, num, den) for _ in range(max(1, d // 2))]
        return [vals[int(rng.integers(0, len(vals)))] for _ in range(d)]
    raise ValueError(f"unknown distribution {dist!r}")


def random_real_rooted(
    rng: np.random.Generator,
    d: int,
    n: int | None = None,
    dists=DISTRIBUTIONS,
    num: int = 6,
    den: int = 4,
) -> RatPoly:
    """Monic real-rooted polynomial of degree ``d`` with ambient degree ``n``."""
    dist = dists[int(rng.integers(0, len(dists)))]
    return from_roots(random_roots(rng, d, dist, num, den)).with_ambient(n if n is not None else d)


def random_deficient_degrees(rng: np.random.Generator, n: int) -> tuple[int, int, int]:
    """Degrees ``(dp, dq, dr)`` with ``(n-dp) + (n-dq) + (n-dr) < n``, at least one below ``n``."""
    while True:
        degs = tuple(int(v) for v in rng.integers(1, n + 1, size=3))
        if sum(n - d for d in degs) < n and min(degs) < n:
            return degs
