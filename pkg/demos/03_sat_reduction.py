"""
3-SAT gadget graphs
===================

A formula becomes a graph whose multiset resolving sets of size 2n+m, taken
one vertex per twin pair or selector quad, are exactly satisfying assignments.
"""

# %%
from msetdim.reduction import (
    CnfFormula,
    all_polarity_formula,
    assignment_from_basis,
    build_reduction,
    parse_dimacs,
    target_k,
    verify_reduction,
)

# %%
f = parse_dimacs("p cnf 3 1\n1 2 -3 0\n")
rg = build_reduction(f)
print(rg.graph.n, "vertices,", rg.graph.m, "edges, budget", target_k(f))
print("tails t:", rg.t, " s:", rg.s)

# %%
rep = verify_reduction(f, rg=rg)
print(rep.to_text())
print("witness roles:", " ".join(rep.witness_roles))
print("assignment:", assignment_from_basis(rg, rep.witness))

# %%
# two clauses, still satisfiable
g = CnfFormula.from_ints(3, [[1, 2, 3], [-1, -2, 3]])
print(verify_reduction(g).to_text())

# %%
# all eight sign patterns: unsatisfiable, and 2^17 candidates all fail (a few seconds)
u = all_polarity_formula()
rep = verify_reduction(u)
print("candidates", rep.candidates, "witness found", rep.exists_witness, "agreement", rep.agreement)
