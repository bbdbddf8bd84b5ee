"""
Small-graph catalog
===================

Enumerates connected graphs up to isomorphism and tabulates the multiset
dimension next to the metric dimension.
"""

# %%
from collections import Counter

from msetdim import metric_dimension, multiset_dimension
from msetdim.catalog import connected_graphs
from msetdim.io import to_graph6

# %%
for n in range(1, 8):
    print(n, len(connected_graphs(n)))  # 1 1 2 6 21 112 853

# %%
tally = Counter()
for n in range(1, 7):
    for g in connected_graphs(n):
        r = multiset_dimension(g)
        tally[(n, r.value if not r.infinite else "inf")] += 1
for key in sorted(tally, key=str):
    print(key, tally[key])

# %%
# finite cases, with both dimensions
for g in connected_graphs(6):
    r = multiset_dimension(g)
    if not r.infinite:
        print(to_graph6(g), "dim", metric_dimension(g)[0], "dim_ms", r.value, "witness", r.witness)
