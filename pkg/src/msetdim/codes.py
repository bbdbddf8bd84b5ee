"""Multiset representations, ID-codes and the three resolving-type verifiers.

A multiset of distances is kept in canonical form as a non-decreasing tuple.
The count vector ``(a_1, ..., a_d)`` of an ID-code counts landmarks at each
distance ``1..d``; the two forms convert into each other without any graph
access once the landmark count is known.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Sequence

from msetdim.graph import DistanceMatrix, diameter


@dataclass(frozen=True, order=True)
class MultisetCode:
    entries: tuple[int, ...]

    def __post_init__(self):
        if any(a > b for a, b in zip(self.entries, self.entries[1:])):
            raise ValueError("MultisetCode entries must be sorted non-decreasingly")
        if self.entries and self.entries[0] < 0:
            raise ValueError("MultisetCode entries must be non-negative")

    @classmethod
    def of(cls, values: Iterable[int]) -> MultisetCode:
        return cls(tuple(sorted(int(v) for v in values)))

    @classmethod
    def parse(cls, text: str) -> MultisetCode:
        text = text.strip()
        return cls.of(int(t) for t in text.split(",")) if text else cls(())

    def __len__(self):
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __str__(self):
        return ",".join(map(str, self.entries))

    def digits(self) -> str:
        """Concatenated digit string, e.g. ``"0144"``; entries >= 10 fall back to ``str``."""
        if all(e < 10 for e in self.entries):
            return "".join(map(str, self.entries))
        return str(self)

    def contains_zero(self) -> bool:
        return bool(self.entries) and self.entries[0] == 0


@dataclass(frozen=True)
class IdCode:
    counts: tuple[int, ...]
    landmark_count: int

    def __post_init__(self):
        if any(c < 0 or c > self.landmark_count for c in self.counts):
            raise ValueError("each count must lie in 0..landmark_count")

    @property
    def diameter(self) -> int:
        return len(self.counts)

    def __str__(self):
        return "(" + ",".join(map(str, self.counts)) + f");{self.landmark_count}"

    @classmethod
    def parse(cls, text: str) -> IdCode:
        vec, _, size = text.strip().partition(";")
        inner = vec.strip().removeprefix("(").removesuffix(")")
        counts = tuple(int(t) for t in inner.split(",")) if inner.strip() else ()
        return cls(counts, int(size))


def _check_set(dm: DistanceMatrix, S: Iterable[int]) -> tuple[int, ...]:
    S = tuple(int(s) for s in S)
    if len(set(S)) != len(S):
        raise ValueError(f"landmark set has repeated vertices: {S}")
    for s in S:
        if not 0 <= s < dm.n:
            raise ValueError(f"landmark {s} out of range 0..{dm.n - 1}")
    return S


def multiset_rep(dm: DistanceMatrix, v: int, S: Iterable[int]) -> MultisetCode:
    dm.require_connected()
    S = _check_set(dm, S)
    row = dm.d[v]
    return MultisetCode(tuple(sorted(int(row[s]) for s in S)))


def shift(c: MultisetCode, i: int) -> MultisetCode:
    """Add ``i`` to every entry."""
    if c.entries and c.entries[0] + i < 0:
        raise ValueError(f"shifting {c} by {i} gives a negative distance")
    return MultisetCode(tuple(e + i for e in c.entries))


def multiset_to_id(c: MultisetCode, s_size: int, d: int) -> IdCode:
    if len(c) != s_size:
        raise ValueError(f"code has {len(c)} entries but |S| = {s_size}")
    if c.entries and c.entries[-1] > d:
        raise ValueError(f"entry {c.entries[-1]} exceeds diameter {d}")
    hist = Counter(c.entries)
    return IdCode(tuple(hist[i] for i in range(1, d + 1)), s_size)


def id_to_multiset(c: IdCode) -> MultisetCode:
    total = sum(c.counts)
    if total == c.landmark_count:
        zero = ()
    elif total == c.landmark_count - 1:
        zero = (0,)
    else:
        raise ValueError(f"counts sum to {total}; expected {c.landmark_count} or {c.landmark_count - 1}")
    return MultisetCode(zero + tuple(i for i, a in enumerate(c.counts, 1) for _ in range(a)))


def id_code(dm: DistanceMatrix, v: int, S: Iterable[int], d: int | None = None) -> IdCode:
    diam = diameter(dm)
    if d is None:
        d = diam
    elif d != diam:
        raise ValueError(f"given diameter {d} differs from the graph's diameter {diam}")
    S = _check_set(dm, S)
    row = dm.d[v]
    hist = Counter(int(row[s]) for s in S)
    return IdCode(tuple(hist[i] for i in range(1, d + 1)), len(S))


def _all_distinct(keys: Sequence, method: str) -> bool:
    if method == "hash":
        return len(set(keys)) == len(keys)
    if method == "sort":
        ordered = sorted(keys)
        return all(a != b for a, b in zip(ordered, ordered[1:]))
    raise ValueError(f"unknown method {method!r}")


# ``method="sort"`` is the deterministic fallback used for audits; both give
# identical answers.
def is_multiset_resolving(dm: DistanceMatrix, S: Iterable[int], method: str = "hash") -> bool:
    dm.require_connected()
    S = list(_check_set(dm, S))
    sub = dm.d[:, S]
    keys = [tuple(sorted(row)) for row in sub.tolist()]
    return _all_distinct(keys, method)


def is_id_coloring(dm: DistanceMatrix, S: Iterable[int], method: str = "hash") -> bool:
    d = diameter(dm)
    S = _check_set(dm, S)
    keys = [id_code(dm, v, S, d).counts for v in range(dm.n)]
    return _all_distinct(keys, method)


def is_resolving(dm: DistanceMatrix, S: Iterable[int], method: str = "hash") -> bool:
    dm.require_connected()
    S = list(_check_set(dm, S))
    keys = [tuple(row) for row in dm.d[:, S].tolist()]
    return _all_distinct(keys, method)


def representations(dm: DistanceMatrix, S: Iterable[int]) -> list[MultisetCode]:
    """Multiset representation of every vertex, indexed by vertex."""
    dm.require_connected()
    S = list(_check_set(dm, S))
    return [MultisetCode(tuple(sorted(row))) for row in dm.d[:, S].tolist()]


def collisions(dm: DistanceMatrix, S: Iterable[int]) -> list[tuple[int, ...]]:
    """Groups of >= 2 vertices sharing a multiset representation."""
    groups: dict[MultisetCode, list[int]] = {}
    for v, c in enumerate(representations(dm, S)):
        groups.setdefault(c, []).append(v)
    return [tuple(g) for g in groups.values() if len(g) > 1]
