"""Strong products, king grids and the G x K_n classification.

A king grid vertex is addressed by ``(i, j)`` with ``1 <= i, j <= n``: ``i``
is the column (x coordinate) and ``j`` the row, origin at the bottom left.
It sits at flat index ``(i - 1) * n + (j - 1)``, which is the left-factor-major
layout of ``strong_product(path_graph(n), path_graph(n))``.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from msetdim.codes import MultisetCode, is_multiset_resolving, representations
from msetdim.errors import GraphError
from msetdim.graph import Graph, all_pairs_distances, from_edge_list

GridCoord = tuple[int, int]


@dataclass(frozen=True)
class ProductIndexMap:
    left: int
    right: int

    def index(self, g: int, h: int) -> int:
        if not (0 <= g < self.left and 0 <= h < self.right):
            raise IndexError(f"({g}, {h}) outside {self.left} x {self.right}")
        return g * self.right + h

    def pair(self, idx: int) -> tuple[int, int]:
        if not 0 <= idx < self.left * self.right:
            raise IndexError(idx)
        return divmod(idx, self.right)


def strong_product(g: Graph, h: Graph) -> tuple[Graph, ProductIndexMap]:
    pm = ProductIndexMap(g.n, h.n)
    closed_g = [g.adj[a] | 1 << a for a in range(g.n)]
    closed_h = [h.adj[b] | 1 << b for b in range(h.n)]
    edges = []
    for a in range(g.n):
        for b in range(h.n):
            u = pm.index(a, b)
            for a2 in range(g.n):
                if not closed_g[a] >> a2 & 1:
                    continue
                for b2 in range(h.n):
                    if closed_h[b] >> b2 & 1:
                        v = pm.index(a2, b2)
                        if u < v:
                            edges.append((u, v))
    labels = None
    if g.labels is not None or h.labels is not None:
        labels = [f"({g.label(a)},{h.label(b)})" for a in range(g.n) for b in range(h.n)]
    return from_edge_list(g.n * h.n, edges, labels), pm


def path_graph(n: int) -> Graph:
    if n < 1:
        raise GraphError("path_graph needs n >= 1")
    return from_edge_list(n, [(i, i + 1) for i in range(n - 1)])


def complete_graph(n: int) -> Graph:
    if n < 1:
        raise GraphError("complete_graph needs n >= 1")
    return from_edge_list(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def star(n: int) -> Graph:
    """K_{1,n}: centre 0 joined to leaves 1..n."""
    if n < 1:
        raise GraphError("star needs n >= 1")
    return from_edge_list(n + 1, [(0, i) for i in range(1, n + 1)])


def spider(n: int) -> Graph:
    """Star with ``n`` leaves whose i-th edge (i = 0..n-1) is subdivided i times.

    Vertex 0 is the centre; leg ``i`` has ``i + 1`` edges and its vertices
    follow consecutively, nearest the centre first.
    """
    if n < 3:
        raise GraphError("spider needs n >= 3")
    edges = []
    nxt = 1
    for leg in range(n):
        prev = 0
        for _ in range(leg + 1):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
    return from_edge_list(nxt, edges)


@dataclass(frozen=True)
class GridMap:
    n: int

    def index(self, c: GridCoord) -> int:
        i, j = c
        if not (1 <= i <= self.n and 1 <= j <= self.n):
            raise IndexError(f"{c} outside the {self.n} x {self.n} grid")
        return (i - 1) * self.n + (j - 1)

    def coord(self, idx: int) -> GridCoord:
        i, j = divmod(idx, self.n)
        return i + 1, j + 1

    def indices(self, coords: Iterable[GridCoord]) -> list[int]:
        return [self.index(c) for c in coords]


def king_grid(n: int) -> tuple[Graph, GridMap]:
    p = path_graph(n)
    g, _ = strong_product(p, p)
    gm = GridMap(n)
    return g.relabel([f"({i},{j})" for i, j in map(gm.coord, range(n * n))]), gm


def king_grid_witness(n: int) -> tuple[GridCoord, ...] | None:
    """A multiset resolving set of P_n x P_n in grid coordinates; ``None`` if none exists."""
    if n < 1:
        raise GraphError("king grid needs n >= 1")
    if n <= 3:
        return None
    if n == 4:
        return ((1, 1), (2, 1), (4, 1), (1, 3), (2, 3), (2, 4))
    if n == 6:
        return ((2, 1), (2, 2), (6, 1), (1, 6))
    if n % 2:
        return ((1, 1), (2, 1), (n, 1), (1, n))
    return ((2, 2), (2, 3), (n, 2), (2, n))


def border(n: int) -> list[GridCoord]:
    return [(x, y) for x in range(1, n + 1) for y in range(1, n + 1) if x in (1, n) or y in (1, n)]


def predicted_border_code(n: int, v: GridCoord) -> MultisetCode:
    """Closed-form code of a boundary vertex w.r.t. {(1,1),(2,1),(n,1),(1,n)}, odd n >= 7."""
    if n < 7 or n % 2 == 0:
        raise ValueError("closed-form border codes are defined for odd n >= 7")
    x, y = v
    if not (1 <= x <= n and 1 <= y <= n) or not (x in (1, n) or y in (1, n)):
        raise ValueError(f"{v} is not on the boundary of the {n} x {n} grid")
    if y == n:
        vals = (x - 1, n - 1, n - 1, n - 1)
    elif x == n:
        vals = (y - 1, n - 2, n - 1, n - 1)
    elif (x, y) == (1, 1):
        vals = (0, 1, n - 1, n - 1)
    elif x == 1:
        vals = (y - 1, y - 1, n - y, n - 1)
    else:
        vals = (x - 1, x - 2, n - x, n - 1)
    return MultisetCode.of(vals)


def code_grid(n: int, coords: Sequence[GridCoord]) -> str:
    """Per-vertex sorted codes laid out like the grid: top row first, columns left to right."""
    g, gm = king_grid(n)
    reps = representations(all_pairs_distances(g), gm.indices(coords))
    rows = []
    for y in range(n, 0, -1):
        rows.append(" ".join(reps[gm.index((x, y))].digits() for x in range(1, n + 1)))
    return "\n".join(rows) + "\n"


def coords_text(coords: Iterable[GridCoord]) -> str:
    return " ".join(f"({i},{j})" for i, j in coords)


def is_multiset_distance_irregular(g: Graph) -> bool:
    dm = all_pairs_distances(g)
    return is_multiset_resolving(dm, range(g.n))


@dataclass(frozen=True)
class Classification:
    finite: bool
    value: int | None
    reason: str

    def to_text(self) -> str:
        return (
            f"finite = {str(self.finite).lower()}\n"
            f"value = {'infinity' if self.value is None else self.value}\n"
            f"reason = {self.reason}\n"
        )


def classify_strong_with_complete(g: Graph, n: int) -> Classification:
    """Whether G x K_n has a multiset resolving set, decided without search."""
    if n < 2:
        raise ValueError("complete factor must have n >= 2")
    all_pairs_distances(g).require_connected()
    if n >= 3:
        return Classification(False, None, "complete-factor-at-least-3")
    if is_multiset_distance_irregular(g):
        return Classification(True, g.n, "multiset-distance-irregular")
    return Classification(False, None, "not-multiset-distance-irregular")
