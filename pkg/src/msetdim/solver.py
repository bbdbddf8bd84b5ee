"""Exact metric dimension and multiset dimension by exhaustive search.

Candidate landmark sets are checked in numpy batches.  Each vertex gets a
64-bit key for its distance profile: a sum of random per-distance weights
(order-free, for multisets) or of per-position weights (for ordered vectors).
Distinct keys prove distinct profiles; every key collision is re-checked
exactly, so the batch verdict never depends on the hash being lucky.
"""
from __future__ import annotations

import itertools
import math
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

import numpy as np

from msetdim.codes import is_multiset_resolving
from msetdim.errors import GuardExceededError
from msetdim.graph import DistanceMatrix, Graph, all_pairs_distances, diameter, is_path, twin_classes

DEFAULT_MAX_N = 30
BATCH = 2048
_SEED = 0x6D736574


def multichoose(d: int, k: int) -> int:
    """Number of size-``k`` multisets over ``{1..d}``."""
    if k == 0:
        return 1
    return math.comb(d + k - 1, k)


def counting_lower_bound(n: int, d: int) -> int:
    """Smallest ``k`` whose zero-free codes can cover the ``n - k`` non-landmarks."""
    k = 0
    while multichoose(d, k) < n - k:
        k += 1
    return k


class _Keyer:
    def __init__(self, dm: DistanceMatrix, ordered: bool, width: int):
        self.D = np.ascontiguousarray(dm.d)
        self.ordered = ordered
        rng = np.random.default_rng(_SEED)
        top = int(self.D.max()) + 1 if self.D.size else 1
        rows = width if ordered else 1
        self.W = rng.integers(0, 2**64 - 1, size=(rows, top), dtype=np.uint64, endpoint=True)

    def keys(self, C: np.ndarray) -> np.ndarray:
        """(B, k) landmark indices -> (B, n) uint64 profile keys."""
        K = np.zeros((C.shape[0], self.D.shape[0]), dtype=np.uint64)
        for i in range(C.shape[1]):
            # row of D for landmark C[:, i] = its distance to every vertex
            K += self.W[i if self.ordered else 0][self.D[C[:, i]]]
        return K

    def exact_profile(self, c: Sequence[int], v: int):
        vals = self.D[v, list(c)].tolist()
        return tuple(vals) if self.ordered else tuple(sorted(vals))

    def exact_check(self, c: Sequence[int]) -> bool:
        profiles = {self.exact_profile(c, v) for v in range(self.D.shape[0])}
        return len(profiles) == self.D.shape[0]

    def check(self, C: np.ndarray) -> np.ndarray:
        """Boolean verdict per candidate row of ``C``; exact."""
        if C.shape[0] == 0:
            return np.zeros(0, dtype=bool)
        n = self.D.shape[0]
        if n <= 1:
            return np.ones(C.shape[0], dtype=bool)
        if C.shape[1] == 0:
            return np.zeros(C.shape[0], dtype=bool)
        K = self.keys(C)
        order = np.argsort(K, axis=1, kind="stable")
        Ks = np.take_along_axis(K, order, axis=1)
        eq = Ks[:, 1:] == Ks[:, :-1]
        dup = eq.any(axis=1)
        ok = ~dup
        rows = np.flatnonzero(dup)
        if rows.size:
            first = eq[rows].argmax(axis=1)
            u = order[rows, first]
            w = order[rows, first + 1]
            pu = self.D[C[rows], u[:, None]]
            pw = self.D[C[rows], w[:, None]]
            if not self.ordered:
                pu = np.sort(pu, axis=1)
                pw = np.sort(pw, axis=1)
            real = (pu == pw).all(axis=1)
            for r in rows[~real]:
                ok[r] = self.exact_check(C[r].tolist())
        return ok


@dataclass
class DimResult:
    """Outcome of an exact dimension computation.

    ``value`` is ``None`` when the dimension is infinite; ``reason`` then says
    why (``"twin-class-overflow"``, ``"exhausted-all-subsets"`` or the opt-in
    ``"diameter-at-most-2"``).
    """

    value: int | None
    witness: tuple[int, ...] = ()
    reason: str | None = None
    lower_bounds: dict[str, int] = field(default_factory=dict)
    subsets_examined: int = 0
    wall_time_ms: float = 0.0

    @property
    def infinite(self) -> bool:
        return self.value is None

    def to_text(self, labels: Sequence[str] | None = None, wall_time: bool = True) -> str:
        lines = [
            f"value = {'infinity' if self.value is None else self.value}",
            f"reason = {self.reason or 'none'}",
            "witness = " + ",".join(map(str, self.witness)),
        ]
        if labels is not None:
            lines.append("witness_labels = " + " ".join(labels[v] for v in self.witness))
        lines.append("lower_bounds = " + ",".join(f"{k}:{v}" for k, v in self.lower_bounds.items()))
        lines.append(f"subsets_examined = {self.subsets_examined}")
        if wall_time:
            lines.append(f"wall_time_ms = {self.wall_time_ms:.1f}")
        return "\n".join(lines) + "\n"


class _Budget:
    def __init__(self, max_subsets, time_budget):
        self.max_subsets = max_subsets
        self.deadline = None if time_budget is None else time.monotonic() + time_budget
        self.examined = 0

    def reserve(self, count: int):
        if self.max_subsets is not None and self.examined + count > self.max_subsets:
            raise GuardExceededError(
                f"search would examine more than {self.max_subsets} subsets "
                f"({self.examined} done, {count} more requested)"
            )

    def check_time(self):
        if self.deadline is not None and time.monotonic() > self.deadline:
            raise GuardExceededError("time budget exhausted")


def _batched(it: Iterator, size: int) -> Iterator[list]:
    while True:
        chunk = list(itertools.islice(it, size))
        if not chunk:
            return
        yield chunk


def _scan_block(keyer: _Keyer, n: int, k: int, first: int, budget: _Budget):
    """First resolving k-subset with smallest element ``first``, plus the count examined."""
    examined = 0
    tails = itertools.combinations(range(first + 1, n), k - 1)
    for chunk in _batched(tails, BATCH):
        budget.check_time()
        C = np.empty((len(chunk), k), dtype=np.intp)
        C[:, 0] = first
        if k > 1:
            C[:, 1:] = chunk
        hit = np.flatnonzero(keyer.check(C))
        if hit.size:
            return tuple(C[hit[0]].tolist()), examined + int(hit[0]) + 1
        examined += len(chunk)
    return None, examined


def _search_size(keyer: _Keyer, n: int, k: int, budget: _Budget, workers: int) -> tuple[int, ...] | None:
    budget.reserve(math.comb(n, k))
    if k == 0:
        budget.examined += 1
        return () if keyer.check(np.zeros((1, 0), dtype=np.intp))[0] else None
    firsts = range(0, n - k + 1)
    if workers <= 1:
        waves = ([f] for f in firsts)
        pool = None
    else:
        waves = _batched(iter(firsts), workers)
        pool = ThreadPoolExecutor(max_workers=workers)
    try:
        for wave in waves:
            scan = lambda f: _scan_block(keyer, n, k, f, budget)  # noqa: E731
            results = [scan(wave[0])] if pool is None else list(pool.map(scan, wave))
            # Blocks past the first hit are discarded so counts and witness
            # match the sequential scan exactly.
            for found, examined in results:
                budget.examined += examined
                if found is not None:
                    return found
    finally:
        if pool is not None:
            pool.shutdown()
    return None


def _prepare(g: Graph, dm: DistanceMatrix | None, max_n: int | None) -> DistanceMatrix:
    if max_n is not None and g.n > max_n:
        raise GuardExceededError(f"graph has {g.n} vertices; exhaustive-search guard is {max_n}")
    dm = dm if dm is not None else all_pairs_distances(g)
    dm.require_connected()
    return dm


def metric_dimension(
    g: Graph,
    *,
    dm: DistanceMatrix | None = None,
    max_n: int | None = DEFAULT_MAX_N,
    max_subsets: int | None = None,
    time_budget: float | None = None,
    workers: int = 1,
) -> tuple[int, tuple[int, ...]]:
    """Minimum resolving set size and the lexicographically smallest basis."""
    dm = _prepare(g, dm, max_n)
    keyer = _Keyer(dm, ordered=True, width=max(g.n, 1))
    budget = _Budget(max_subsets, time_budget)
    for k in range(0, g.n + 1):
        found = _search_size(keyer, g.n, k, budget, workers)
        if found is not None:
            return k, found
    raise AssertionError("the full vertex set always resolves")


def multiset_dimension(
    g: Graph,
    *,
    dm: DistanceMatrix | None = None,
    max_n: int | None = DEFAULT_MAX_N,
    max_subsets: int | None = None,
    time_budget: float | None = None,
    workers: int = 1,
    diameter_shortcut: bool = False,
) -> DimResult:
    """Exact multiset dimension with admissible lower bounds and twin pruning.

    Sizes are searched upward from the largest lower bound, enumerating every
    subset of each size since multiset resolvability is not monotone in the
    set.  ``diameter_shortcut`` declares non-path graphs of diameter <= 2
    infinite without search.
    """
    t0 = time.perf_counter()
    dm = _prepare(g, dm, max_n)
    n = g.n

    def done(**kw):
        return DimResult(wall_time_ms=(time.perf_counter() - t0) * 1e3, **kw)

    if n == 1:
        return done(value=0, witness=(), subsets_examined=1)
    if is_path(g):
        end = min(v for v in range(n) if g.degree(v) == 1)
        return done(value=1, witness=(end,), lower_bounds={"path-check": 1}, subsets_examined=1)

    twins = twin_classes(g)
    if twins.max_class_size >= 3:
        return done(value=None, reason="twin-class-overflow", lower_bounds={"twin-pairs": len(twins)})

    d = diameter(dm)
    if diameter_shortcut and d <= 2:
        return done(value=None, reason="diameter-at-most-2")

    budget = _Budget(max_subsets, time_budget)
    bounds = {"no-size-2": 3}
    mdim, _ = metric_dimension(g, dm=dm, max_n=None, max_subsets=max_subsets, time_budget=time_budget, workers=workers)
    bounds["metric-dimension"] = mdim
    bounds["twin-pairs"] = len(twins)
    bounds["multichoose"] = counting_lower_bound(n, d)
    start = max(bounds.values())

    keyer = _Keyer(dm, ordered=False, width=n)
    for k in range(start, n + 1):
        found = _search_size(keyer, n, k, budget, workers)
        if found is not None:
            return done(value=k, witness=found, lower_bounds=bounds, subsets_examined=budget.examined)
    return done(value=None, reason="exhausted-all-subsets", lower_bounds=bounds, subsets_examined=budget.examined)


def reference_multiset_dimension(g: Graph, dm: DistanceMatrix | None = None) -> DimResult:
    """Pruning-free oracle: every subset of every size, smallest first."""
    dm = dm if dm is not None else all_pairs_distances(g)
    examined = 0
    for k in range(g.n + 1):
        for S in itertools.combinations(range(g.n), k):
            examined += 1
            if is_multiset_resolving(dm, S):
                return DimResult(value=k, witness=S, subsets_examined=examined)
    return DimResult(value=None, reason="exhausted-all-subsets", subsets_examined=examined)


def resolving_subsets(dm: DistanceMatrix, k: int) -> Iterator[tuple[int, ...]]:
    """All multiset resolving sets of size ``k``, in lexicographic order."""
    dm.require_connected()
    keyer = _Keyer(dm, ordered=False, width=max(k, 1))
    for chunk in _batched(itertools.combinations(range(dm.n), k), BATCH):
        C = np.array(chunk, dtype=np.intp).reshape(len(chunk), k)
        for r in np.flatnonzero(keyer.check(C)):
            yield tuple(C[r].tolist())


def count_resolving_subsets(dm: DistanceMatrix, k: int) -> tuple[int, int]:
    """(number of resolving k-subsets, number examined)."""
    examined = 0
    hits = 0
    keyer = _Keyer(dm, ordered=False, width=max(k, 1))
    for chunk in _batched(itertools.combinations(range(dm.n), k), BATCH):
        C = np.array(chunk, dtype=np.intp).reshape(len(chunk), k)
        hits += int(keyer.check(C).sum())
        examined += len(chunk)
    return hits, examined


def _product_block(groups: list[np.ndarray], start: int, stop: int) -> np.ndarray:
    idx = np.arange(start, stop, dtype=np.int64)
    C = np.empty((stop - start, len(groups)), dtype=np.intp)
    for col in range(len(groups) - 1, -1, -1):
        size = len(groups[col])
        idx, digit = np.divmod(idx, size)
        C[:, col] = groups[col][digit]
    return C


def iter_constrained_witnesses(
    dm: DistanceMatrix,
    groups: Sequence[Iterable[int]],
    *,
    max_candidates: int | None = None,
    workers: int = 1,
    stats: dict | None = None,
) -> Iterator[tuple[int, ...]]:
    """Resolving sets picking exactly one vertex per group, in product order.

    Product order is lexicographic in the per-group choice, last group fastest.
    """
    groups = [np.array(sorted(set(int(v) for v in grp)), dtype=np.intp) for grp in groups]
    seen: set[int] = set()
    for grp in groups:
        if seen.intersection(grp.tolist()):
            raise ValueError("constraint groups must be pairwise disjoint")
        seen.update(grp.tolist())
    dm.require_connected()
    total = math.prod(len(grp) for grp in groups)
    if max_candidates is not None and total > max_candidates:
        raise GuardExceededError(f"{total} constrained candidates exceed the guard of {max_candidates}")
    keyer = _Keyer(dm, ordered=False, width=max(len(groups), 1))
    if stats is not None:
        stats["candidates"] = total
        stats["examined"] = 0
    blocks = [(s, min(s + BATCH, total)) for s in range(0, total, BATCH)]

    def run(block):
        C = _product_block(groups, *block)
        return C, keyer.check(C)

    if workers <= 1:
        results = map(run, blocks)
    else:
        pool = ThreadPoolExecutor(max_workers=workers)
        results = pool.map(run, blocks)
    try:
        for C, ok in results:
            if stats is not None:
                stats["examined"] += C.shape[0]
            for r in np.flatnonzero(ok):
                yield tuple(sorted(C[r].tolist()))
    finally:
        if workers > 1:
            pool.shutdown(cancel_futures=True)


def multiset_dimension_constrained(
    g: Graph | DistanceMatrix,
    groups: Sequence[Iterable[int]],
    k: int,
    *,
    max_candidates: int | None = None,
    workers: int = 1,
) -> tuple[int, ...] | None:
    """First resolving set taking one vertex from each of ``k`` disjoint groups."""
    if len(groups) != k:
        raise ValueError(f"expected {k} groups, got {len(groups)}")
    dm = g if isinstance(g, DistanceMatrix) else all_pairs_distances(g)
    return next(iter_constrained_witnesses(dm, groups, max_candidates=max_candidates, workers=workers), None)
