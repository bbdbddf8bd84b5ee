"""
Multiset representations and ID-codes
=====================================

The sorted distance multiset of a vertex and its count vector carry the same
information, so a set separates every vertex in one form iff it does in the other.
"""

# %%
import random

from msetdim import all_pairs_distances, is_id_coloring, is_multiset_resolving, king_grid
from msetdim.codes import id_code, id_to_multiset, is_resolving, multiset_rep, multiset_to_id
from msetdim.graph import diameter, from_edge_list

# %%
g, gm = king_grid(5)
dm = all_pairs_distances(g)
S = gm.indices([(1, 1), (2, 1), (5, 1), (1, 5)])
v = gm.index((1, 1))
c = multiset_rep(dm, v, S)
print("multiset:", c)                     # 0,1,4,4
print("id code: ", id_code(dm, v, S, 4))  # one landmark at distance 1, two at 4; sum is |S| - 1
print("back:    ", id_to_multiset(multiset_to_id(c, len(S), 4)))

# %%
# random connected graphs: both predicates always agree
rng = random.Random(0)
agree = total = 0
for _ in range(300):
    n = rng.randint(2, 10)
    edges = {(rng.randrange(k), k) for k in range(1, n)}  # random tree keeps it connected
    edges |= {(u, w) for u in range(n) for w in range(u + 1, n) if rng.random() < 0.2}
    h = from_edge_list(n, sorted(edges))
    d = all_pairs_distances(h)
    T = rng.sample(range(n), rng.randint(1, n))
    agree += is_id_coloring(d, T) == is_multiset_resolving(d, T)
    total += 1
print(agree, "/", total, "agree")

# %%
# multiset resolving is strictly stronger than ordinary resolving
star = from_edge_list(4, [(0, 1), (0, 2), (0, 3)])
d = all_pairs_distances(star)
print("resolving:", is_resolving(d, [1, 2]), " multiset resolving:", is_multiset_resolving(d, [1, 2]))
print("diameter:", diameter(d))
