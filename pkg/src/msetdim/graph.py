"""Simple undirected graphs on dense 0-based vertex indices.

Adjacency rows are Python ``int`` bit-sets: bit ``v`` of ``adj[u]`` is set
iff ``u`` and ``v`` are adjacent.  Distances are computed by bit-parallel
breadth-first search and stored in a read-only numpy array.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

import numpy as np

from msetdim.errors import DisconnectedGraphError, GraphError

UNREACHABLE = -1


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the indices of the set bits of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple[int, ...]
    labels: tuple[str, ...] | None = field(default=None, compare=False)

    def __post_init__(self):
        if len(self.adj) != self.n:
            raise GraphError(f"expected {self.n} adjacency rows, got {len(self.adj)}")
        if self.labels is not None and len(self.labels) != self.n:
            raise GraphError("label count does not match vertex count")
        full = (1 << self.n) - 1
        for u, row in enumerate(self.adj):
            if row & ~full:
                raise GraphError(f"vertex {u} has a neighbor outside 0..{self.n - 1}")
            if row >> u & 1:
                raise GraphError(f"self-loop at vertex {u}")
            for v in iter_bits(row):
                if not self.adj[v] >> u & 1:
                    raise GraphError(f"asymmetric adjacency between {u} and {v}")

    def neighbors(self, v: int) -> list[int]:
        return list(iter_bits(self.adj[v]))

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def edges(self) -> list[tuple[int, int]]:
        """Edges as sorted pairs ``(u, v)`` with ``u < v``, in lexicographic order."""
        return [(u, v) for u in range(self.n) for v in iter_bits(self.adj[u] >> (u + 1) << (u + 1))]

    @property
    def m(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def label(self, v: int) -> str:
        return self.labels[v] if self.labels is not None else str(v)

    def relabel(self, labels: Sequence[str]) -> Graph:
        return Graph(self.n, self.adj, tuple(labels))

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m})"


def from_edge_list(n: int, edges: Iterable[tuple[int, int]], labels: Sequence[str] | None = None) -> Graph:
    """Build a graph on vertices ``0..n-1``; duplicate edges are collapsed.

    Raises GraphError on an out-of-range index or a self-loop, naming the pair.
    """
    if n < 0:
        raise GraphError("vertex count must be non-negative")
    rows = [0] * n
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u}, {v}) has an index outside 0..{n - 1}")
        if u == v:
            raise GraphError(f"edge ({u}, {v}) is a self-loop")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(n, tuple(rows), tuple(labels) if labels is not None else None)


def _bfs_levels(g: Graph, source: int) -> list[int]:
    dist = [UNREACHABLE] * g.n
    dist[source] = 0
    seen = frontier = 1 << source
    level = 0
    while frontier:
        level += 1
        nxt = 0
        for v in iter_bits(frontier):
            nxt |= g.adj[v]
        nxt &= ~seen
        for v in iter_bits(nxt):
            dist[v] = level
        seen |= nxt
        frontier = nxt
    return dist


@dataclass(frozen=True, eq=False)
class DistanceMatrix:
    """All-pairs hop distances; ``UNREACHABLE`` (-1) marks disconnected pairs."""

    d: np.ndarray

    @property
    def n(self) -> int:
        return self.d.shape[0]

    @property
    def connected(self) -> bool:
        return self.n == 0 or bool((self.d != UNREACHABLE).all())

    def __getitem__(self, uv):
        return self.d[uv]

    def require_connected(self):
        if not self.connected:
            raise DisconnectedGraphError("graph is disconnected")


def all_pairs_distances(g: Graph) -> DistanceMatrix:
    d = np.array([_bfs_levels(g, s) for s in range(g.n)], dtype=np.int64).reshape(g.n, g.n)
    d.setflags(write=False)
    return DistanceMatrix(d)


def diameter(dm: DistanceMatrix) -> int:
    if not dm.connected:
        raise DisconnectedGraphError("diameter is undefined for a disconnected graph")
    return int(dm.d.max()) if dm.n else 0


def is_connected(g: Graph) -> bool:
    if g.n <= 1:
        return True
    return UNREACHABLE not in _bfs_levels(g, 0)


def distance_shell(dm: DistanceMatrix, v: int, q: int) -> set[int]:
    """Vertices at distance exactly ``q`` from ``v``."""
    if not 0 <= v < dm.n:
        raise GraphError(f"vertex {v} out of range")
    return set(np.flatnonzero(dm.d[v] == q).tolist())


@dataclass(frozen=True)
class TwinReport:
    """Maximal twin classes of size >= 2, each tagged ``"open"`` or ``"closed"``."""

    classes: tuple[tuple[int, ...], ...]
    kinds: tuple[str, ...]

    def __iter__(self):
        return iter(zip(self.classes, self.kinds))

    def __len__(self):
        return len(self.classes)

    @property
    def max_class_size(self) -> int:
        return max((len(c) for c in self.classes), default=0)

    def pairs(self) -> list[tuple[int, ...]]:
        return [c for c in self.classes if len(c) == 2]


def twin_classes(g: Graph) -> TwinReport:
    # Equal open (resp. closed) neighbourhoods is an equivalence relation, so
    # grouping by the bit-set yields the maximal classes directly.
    classes = []
    for kind, key in (("open", lambda v: g.adj[v]), ("closed", lambda v: g.adj[v] | 1 << v)):
        groups: dict[int, list[int]] = {}
        for v in range(g.n):
            groups.setdefault(key(v), []).append(v)
        classes.extend((tuple(c), kind) for c in groups.values() if len(c) > 1)
    classes.sort()
    return TwinReport(tuple(c for c, _ in classes), tuple(k for _, k in classes))


def is_path(g: Graph) -> bool:
    """True iff ``g`` is a path graph P_n (n >= 1)."""
    if g.n == 1:
        return True
    degrees = sorted(g.degree(v) for v in range(g.n))
    return g.m == g.n - 1 and degrees[-1] <= 2 and degrees[0] == 1 and is_connected(g)
