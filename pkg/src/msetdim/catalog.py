"""Exhaustive catalog of small connected graphs up to isomorphism.

Every connected graph on ``n`` vertices arises from a connected graph on
``n - 1`` vertices by attaching a new vertex to a non-empty neighbour set
(delete a leaf of a spanning tree to go back).  Isomorphic copies are merged
by a canonical form: the lexicographically largest upper-triangle adjacency
string over all relabelings that list vertices by non-increasing degree.
"""
from __future__ import annotations

import itertools
from functools import lru_cache

from msetdim.graph import Graph, from_edge_list
from msetdim.io import from_graph6, to_graph6


def _relabel(g: Graph, order: tuple[int, ...]) -> tuple[int, ...]:
    pos = {v: k for k, v in enumerate(order)}
    return tuple(sorted(tuple(sorted((pos[u], pos[v]))) for u, v in g.edges()))


def canonical_form(g: Graph) -> str:
    """graph6 string of the canonical relabeling; equal iff isomorphic."""
    by_degree: dict[int, list[int]] = {}
    for v in range(g.n):
        by_degree.setdefault(g.degree(v), []).append(v)
    blocks = [by_degree[d] for d in sorted(by_degree, reverse=True)]
    best = None
    for parts in itertools.product(*(itertools.permutations(b) for b in blocks)):
        order = tuple(v for part in parts for v in part)
        pos = [0] * g.n
        for k, v in enumerate(order):
            pos[v] = k
        bits = 0
        for u, v in g.edges():
            a, b = sorted((pos[u], pos[v]))
            # upper-triangle column order, first pair is the most significant bit
            bits |= 1 << (g.n * g.n - (b * (b - 1) // 2 + a))
        if best is None or bits > best[0]:
            best = (bits, order)
    order = best[1] if best else ()
    return to_graph6(from_edge_list(g.n, _relabel(g, order)))


@lru_cache(maxsize=None)
def _catalog(n: int) -> tuple[str, ...]:
    if n == 1:
        return (to_graph6(from_edge_list(1, [])),)
    seen: dict[str, None] = {}
    for code in _catalog(n - 1):
        base = from_graph6(code)
        for mask in range(1, 1 << (n - 1)):
            extra = [(v, n - 1) for v in range(n - 1) if mask >> v & 1]
            g = from_edge_list(n, base.edges() + extra)
            seen.setdefault(canonical_form(g), None)
    return tuple(sorted(seen))


def connected_graphs(n: int) -> list[Graph]:
    """One representative per isomorphism class of connected graphs on ``n`` vertices."""
    if n < 1:
        return []
    return [from_graph6(code) for code in _catalog(n)]


def connected_graphs_upto(n_max: int) -> list[Graph]:
    return [g for n in range(1, n_max + 1) for g in connected_graphs(n)]
