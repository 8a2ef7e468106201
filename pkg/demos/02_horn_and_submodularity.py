"""Horn triples, the submodularity inequality, and why it fails for matrices."""

# %%
from freeconv import from_roots
from freeconv.inequality_lab import verify_matrix_submodularity, verify_submodularity
from freeconv.majorization import hermitian_falsify, horn_triples, IndexTuple

# Horn triples of size 1 in dimension 3 are the Weyl inequalities i >= j + k - 1.
for t in sorted(horn_triples(3, 1), key=lambda t: t.triple):
    print(t.triple)

# %%
# Sampling Hermitian pairs never breaks a Horn triple, but finds a witness for a non-Horn one.
print("Horn (2,1,2):", hermitian_falsify(IndexTuple(2, [2], [1], [2]), 2000, seed=0))
print("non-Horn (2,2,2):", hermitian_falsify(IndexTuple(2, [2], [2], [2]), 2000, seed=0))

# %%
# For polynomials, lambda_1(p ⊞ q ⊞ r) + lambda_1(r) <= lambda_1(p ⊞ r) + lambda_1(q ⊞ r).
p, q, r = from_roots([2, 0]), from_roots([2, 0]), from_roots([0, 2])
print(verify_submodularity(p, q, r, 2).to_json())

# %%
# The matrix analogue with the same spectra is false: 6 > 4.
A = [[2, 0], [0, 0]]
C = [[0, 0], [0, 2]]
rep = verify_matrix_submodularity(A, A, C)
print(rep.status, rep.witness)
