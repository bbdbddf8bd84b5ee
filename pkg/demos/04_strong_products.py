"""
Strong products with complete graphs
====================================

G x K_2 has a multiset resolving set iff G is multiset distance irregular;
with K_n, n >= 3, it never does.
"""

# %%
from msetdim import multiset_dimension
from msetdim.catalog import connected_graphs_upto
from msetdim.products import (
    classify_strong_with_complete,
    complete_graph,
    is_multiset_distance_irregular,
    path_graph,
    spider,
    strong_product,
)

# %%
sp = spider(3)  # legs of length 1, 2, 3
print("spider edges:", sp.edges())
print("irregular:", is_multiset_distance_irregular(sp))
p, pm = strong_product(sp, complete_graph(2))
print(classify_strong_with_complete(sp, 2).to_text())
print("solver:", multiset_dimension(p).value, "on", p.n, "vertices")

# %%
p3 = path_graph(3)
print(classify_strong_with_complete(p3, 2).to_text())
print("solver:", multiset_dimension(strong_product(p3, complete_graph(2))[0]).reason)

# %%
# which small graphs are irregular?
for g in connected_graphs_upto(7):
    if is_multiset_distance_irregular(g) and g.n > 1:
        print(g.n, g.edges())
