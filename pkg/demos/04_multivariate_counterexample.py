"""The three-variable counterexample to the strong multivariate conjecture."""

# %%
from freeconv.multiaffine import (
    above_roots,
    boxplus_gamma,
    counterexample_poly,
    meval,
    potential,
    rayleigh_difference,
    reproduce_counterexample,
    strongly_rayleigh,
)

p = counterexample_poly()
print("p =", p.to_json())
print("strongly Rayleigh:", strongly_rayleigh(p))
for i, j in ((0, 1), (0, 2), (1, 2)):
    print(f"Delta_{i + 1}{j + 1} =", rayleigh_difference(p, i, j).to_json()["terms"])

# %%
# Each -e_i lies above the roots of p, equivalently each potential at 0 is at most 1.
for i in range(3):
    e = [0, 0, 0]
    e[i] = -1
    print(i + 1, above_roots(p, e).verdict, potential(p, i + 1, (0, 0, 0)))

# %%
# The convolution takes a negative value at (-2, -1, -1), so that point is not above its roots.
pp = boxplus_gamma(p, p)
print("(p ⊞ p)(-2,-1,-1) =", meval(pp, (-2, -1, -1)))
print(above_roots(pp, (-2, -1, -1)).verdict)

# %%
# Full reproduction report.  The value recomputed from the coefficients is -778/441;
# the published figure -1450/441 does not follow from them, but both are negative.
rep = reproduce_counterexample()
print(rep.status, rep.details["published_value_matches"], rep.witness["value"])
