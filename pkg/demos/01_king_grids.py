"""
King grids and their multiset resolving sets
============================================

Builds P_n x P_n, prints the per-vertex sorted codes, and confirms the
small values by exhaustive search.
"""

# %%
import math

from msetdim import all_pairs_distances, is_multiset_resolving, king_grid, multiset_dimension
from msetdim.products import code_grid, coords_text, king_grid_witness
from msetdim.solver import count_resolving_subsets

# %%
# 5 x 5 grid, landmarks in three corners plus the neighbour of one of them
S = king_grid_witness(5)
print("landmarks:", coords_text(S))
print(code_grid(5, S))  # top row first; every code is distinct

# %%
# the 6 x 6 grid needs a different set: the corner pattern fails there
S6 = king_grid_witness(6)
print("landmarks:", coords_text(S6))
print(code_grid(6, S6))

# %%
# exact values for n = 2..6; 36 vertices is over the default guard of 30
for n in range(2, 7):
    g, _ = king_grid(n)
    r = multiset_dimension(g, max_n=40)
    print(n, "infinite" if r.infinite else r.value, r.reason or "", f"{r.wall_time_ms:.1f} ms")

# %%
# no 3-set works on P5 x P5: 20 zero-free codes for 22 unlabelled vertices
g, _ = king_grid(5)
hits, examined = count_resolving_subsets(all_pairs_distances(g), 3)
print(hits, "of", examined, "three-subsets resolve; C(25,3) =", math.comb(25, 3))

# %%
# larger grids: the odd/even constructions keep working
for n in (7, 8, 15, 20, 30):
    g, gm = king_grid(n)
    ok = is_multiset_resolving(all_pairs_distances(g), gm.indices(king_grid_witness(n)))
    print(n, coords_text(king_grid_witness(n)), ok)
