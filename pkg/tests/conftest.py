from fractions import Fraction
from itertools import permutations
from math import factorial

import pytest
from hypothesis import strategies as st

from freeconv.poly import RatPoly, from_roots

small_rats = st.builds(
    Fraction,
    st.integers(min_value=-12, max_value=12),
    st.integers(min_value=1, max_value=6),
)


@st.composite
def rat_polys(draw, max_n=8, min_deg=0):
    n = draw(st.integers(min_value=max(1, min_deg), max_value=max_n))
    d = draw(st.integers(min_value=min_deg, max_value=n))
    coeffs = draw(st.lists(small_rats, min_size=d + 1, max_size=d + 1))
    if min_deg and coeffs[-1] == 0:
        coeffs[-1] = Fraction(1)
    return RatPoly(coeffs, n)


@st.composite
def poly_pairs(draw, max_n=8):
    n = draw(st.integers(min_value=1, max_value=max_n))
    polys = []
    for _ in range(2):
        d = draw(st.integers(min_value=0, max_value=n))
        polys.append(RatPoly(draw(st.lists(small_rats, min_size=d + 1, max_size=d + 1)), n))
    return polys[0], polys[1], n


@st.composite
def real_rooted(draw, n=None, max_n=6, deg=None):
    n = draw(st.integers(min_value=1, max_value=max_n)) if n is None else n
    d = n if deg is None else deg
    roots = draw(st.lists(small_rats, min_size=d, max_size=d))
    return from_roots(roots).with_ambient(n)


def oracle_boxplus(p: RatPoly, q: RatPoly, n: int) -> RatPoly:
    """Coefficient formula: with p = sum (-1)^i a_i x^(n-i), c_k = sum_{i+j=k} (n-i)!(n-j)!/(n!(n-k)!) a_i b_j."""
    a = [(-1) ** i * p.coeff(n - i) for i in range(n + 1)]
    b = [(-1) ** j * q.coeff(n - j) for j in range(n + 1)]
    out = [Fraction(0)] * (n + 1)
    for k in range(n + 1):
        c = Fraction(0)
        for i in range(k + 1):
            j = k - i
            c += Fraction(factorial(n - i) * factorial(n - j), factorial(n) * factorial(n - k)) * a[i] * b[j]
        out[n - k] = (-1) ** k * c
    return RatPoly(out, n)


def permutation_average(ra, rb) -> RatPoly:
    """Expected characteristic polynomial of diag(ra) + P diag(rb) P^T over permutations P."""
    n = len(ra)
    acc = RatPoly([])
    perms = list(permutations(rb))
    for pb in perms:
        acc = acc + from_roots([x + y for x, y in zip(ra, pb)])
    return (acc / len(perms)).with_ambient(n)


# ---------------------------------------------------------------------------
# acceptance reporting: one PASS/FAIL line per criterion

_CRITERIA: dict[int, dict] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(k, title): acceptance criterion number and title")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None or (rep.when != "call" and not rep.failed and not rep.skipped):
        return
    k, title = mark.args
    entry = _CRITERIA.setdefault(k, {"title": title, "ok": True, "notes": []})
    if hasattr(rep, "wasxfail"):
        entry["ok"] = False
        entry["notes"].append(f"{item.name}: expected failure ({rep.wasxfail})")
    elif rep.failed or rep.skipped:
        entry["ok"] = False
        entry["notes"].append(f"{item.name}: {rep.outcome}")


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(_CRITERIA):
        e = _CRITERIA[k]
        line = f"criterion {k:>2}: {'PASS' if e['ok'] else 'FAIL'}  {e['title']}"
        if e["notes"]:
            line += "  [" + "; ".join(e["notes"]) + "]"
        terminalreporter.write_line(line)
