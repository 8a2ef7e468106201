"""A first tour: convolving real-rooted polynomials and watching the roots."""

# %%
from fractions import Fraction

from freeconv import boxplus, from_roots, root_vector
from freeconv.inequality_lab import verify_ualpha_bound, verify_triangle
from freeconv.poly import apply_U_alpha

# Two cubics with rational roots.
p = from_roots([3, 0, -1])
q = from_roots([2, 2, -4])
pq = boxplus(p, q, 3)
print("p     =", p)
print("q     =", q)
print("p ⊞ q =", pq)

# %%
# The result is real-rooted again, though its roots are irrational.
for name, f in (("p", p), ("q", q), ("p ⊞ q", pq)):
    rv = root_vector(f, Fraction(1, 10**6))
    print(f"{name:6s} roots ≈", [f"{float(e.lo):+.6f}" for e in rv.entries])

# %%
# The largest root is subadditive.
print(verify_triangle(p, q, 3).status)

# %%
# A sharper bound after applying 1 - alpha * d/dx to every polynomial.
for alpha in (Fraction(1, 4), 1, 3):
    print("alpha =", alpha, "->", verify_ualpha_bound(p, q, 3, alpha).status)
print("U_1 p =", apply_U_alpha(p, 1))
