"""Merging the two top roots of p and tracking the largest root of the convolution."""

# %%
from fractions import Fraction

from freeconv import boxplus, from_roots
from freeconv.inequality_lab import find_mu_star, pinch_decomposition
from freeconv.roots import top_root

p = from_roots([2, -2])
r = from_roots([1, -1])
print("lambda_1(p ⊞ r) ≈", float(top_root(boxplus(p, r, 2))))

# %%
# p splits as p_tilde + p_hat, where p_tilde has a double root at mu.
d = pinch_decomposition(p, Fraction(1))
print("p_tilde =", d.p_tilde, "  p_hat =", d.p_hat)
print({k: v.to_json() for k, v in d.certificates.items()})

# %%
# The largest mu that keeps lambda_1(p_tilde ⊞ r) on the level; here it is sqrt(5) - 1.
m = find_mu_star(p, r, 2)
print("mu* in", float(m.lo), float(m.hi), " steps:", len(m.steps))
print("monotone:", m.monotone, " both pieces on the level:", m.proposition)
