"""Seeded searches for counterexamples, and what a reproducible report looks like."""

# %%
import json

from freeconv.inequality_lab import SearchConfig, reverify, search_conjectures

reports, summary = search_conjectures(SearchConfig("2.3", n=3), trials=40, seed=7)
print(json.dumps({k: summary[k] for k in ("verified", "violated", "indeterminate", "rng")}, indent=2))

# %%
# Index tuples outside the Horn set do fail for polynomials too, and every failure re-verifies.
reports, summary = search_conjectures(SearchConfig("2.4", n=3), trials=20, seed=1)
bad = [r for r in reports if r.verdict.is_false]
print(len(bad), "violations; first tuple:", bad[0].inputs["tuple"])
print("re-verified:", all(reverify(r).verdict.is_false for r in bad))
