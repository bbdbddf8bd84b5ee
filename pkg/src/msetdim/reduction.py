"""3-SAT to Multiset Dimension gadget reduction, as an executable construction.

For a formula with ``n`` variables and ``m`` clauses the graph has, per
variable ``i``: ends ``T_i``/``F_i``, selectors ``a_i^1, a_i^2, b_i^1, b_i^2``,
a tail path ``d_i^1..d_i^{t_i}`` and twin tips ``e_i^1, e_i^2``; per clause
``j``: a path ``c_j^1 c_j^2 c_j^3``, a tail path ``f_j^1..f_j^{s_j}`` and twin
tips ``g_j^1, g_j^2``.  Tail lengths are ``t_i = 5(i+1)`` and
``s_j = 5(n+j+1)``.  The target budget is ``2n + m``.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from msetdim.codes import is_multiset_resolving
from msetdim.errors import FormulaError, GuardExceededError
from msetdim.graph import DistanceMatrix, Graph, all_pairs_distances, from_edge_list
from msetdim.solver import iter_constrained_witnesses

Literal = tuple[int, bool]  # (variable 1..n, positive?)
Assignment = tuple[bool, ...]  # values[i - 1] is x_i

SAT_GUARD = 20


@dataclass(frozen=True)
class CnfFormula:
    n: int
    clauses: tuple[tuple[Literal, ...], ...]

    def __post_init__(self):
        if self.n < 0:
            raise FormulaError("variable count must be non-negative")
        for no, clause in enumerate(self.clauses, 1):
            _check_clause(clause, self.n, f"clause {no}")

    @property
    def m(self) -> int:
        return len(self.clauses)

    @classmethod
    def from_ints(cls, n: int, clauses: Iterable[Iterable[int]]) -> CnfFormula:
        """Build from DIMACS-style signed integers, e.g. ``[[1, 2, -3]]``."""
        return cls(n, tuple(tuple((abs(x), x > 0) for x in c) for c in clauses))

    def to_dimacs(self) -> str:
        out = [f"p cnf {self.n} {self.m}"]
        for clause in self.clauses:
            out.append(" ".join(str(v if pos else -v) for v, pos in clause) + " 0")
        return "\n".join(out) + "\n"

    def satisfied_by(self, a: Assignment) -> bool:
        return all(any(a[v - 1] == pos for v, pos in clause) for clause in self.clauses)


def _check_clause(clause, n, where, line=None):
    if len(clause) != 3:
        raise FormulaError(f"{where} has {len(clause)} literals; exactly 3 are required", line)
    for v, _ in clause:
        if not 1 <= v <= n:
            raise FormulaError(f"{where} uses variable {v} outside 1..{n}", line)
    if any((v, not pos) in clause for v, pos in clause):
        raise FormulaError(f"{where} contains both polarities of one variable", line)
    if len({v for v, _ in clause}) != 3:
        raise FormulaError(f"{where} repeats a variable", line)


def parse_dimacs(text: str) -> CnfFormula:
    """Parse DIMACS CNF restricted to clauses over three distinct variables."""
    header = None
    clauses = []
    pending: list[int] = []
    pending_line = None
    for no, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        if line.startswith("%"):
            break
        if line.startswith("p"):
            parts = line.split()
            if header is not None:
                raise FormulaError("duplicate problem line", no)
            if len(parts) != 4 or parts[1] != "cnf":
                raise FormulaError("expected 'p cnf <vars> <clauses>'", no)
            try:
                header = (int(parts[2]), int(parts[3]))
            except ValueError:
                raise FormulaError("non-integer counts in problem line", no) from None
            continue
        if header is None:
            raise FormulaError("clause before problem line", no)
        for tok in line.split():
            try:
                x = int(tok)
            except ValueError:
                raise FormulaError(f"unexpected token {tok!r}", no) from None
            if pending_line is None:
                pending_line = no
            if x == 0:
                clause = tuple((abs(y), y > 0) for y in pending)
                _check_clause(clause, header[0], f"clause {len(clauses) + 1}", pending_line)
                clauses.append(clause)
                pending, pending_line = [], None
            else:
                pending.append(x)
    if header is None:
        raise FormulaError("missing problem line")
    if pending:
        raise FormulaError("last clause is not terminated by 0", pending_line)
    if len(clauses) != header[1]:
        raise FormulaError(f"problem line declares {header[1]} clauses, found {len(clauses)}")
    return CnfFormula(header[0], tuple(clauses))


def tail_lengths(n: int, m: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """(t_1..t_n, s_1..s_m)."""
    return tuple(5 * (i + 1) for i in range(1, n + 1)), tuple(5 * (n + j + 1) for j in range(1, m + 1))


def target_k(f: CnfFormula) -> int:
    return 2 * f.n + f.m


@dataclass(frozen=True)
class ReductionGraph:
    formula: CnfFormula
    graph: Graph
    roles: tuple[str, ...]
    t: tuple[int, ...]
    s: tuple[int, ...]
    index: dict[str, int] = field(compare=False, repr=False)

    def v(self, kind: str, i: int, h: int | None = None) -> int:
        """Vertex of role ``kind`` (``"T"``, ``"a"``, ``"c"``, ...) for gadget ``i``."""
        return self.index[f"{kind}:{i}" if h is None else f"{kind}:{i}:{h}"]

    def variable_gadget(self, i: int) -> set[int]:
        return {x for x, r in enumerate(self.roles) if r.split(":")[0] in "TFabde" and int(r.split(":")[1]) == i}

    def clause_gadget(self, j: int) -> set[int]:
        return {x for x, r in enumerate(self.roles) if r.split(":")[0] in "cfg" and int(r.split(":")[1]) == j}

    def groups(self) -> list[list[int]]:
        """The 2n+m disjoint groups a budget-sized basis takes exactly one vertex from."""
        n, m = self.formula.n, self.formula.m
        out = [[self.v("e", i, 1), self.v("e", i, 2)] for i in range(1, n + 1)]
        out += [[self.v("g", j, 1), self.v("g", j, 2)] for j in range(1, m + 1)]
        out += [[self.v(x, i, h) for x in "ab" for h in (1, 2)] for i in range(1, n + 1)]
        return out

    def role_map_text(self) -> str:
        return "".join(f"{x}\t{r}\n" for x, r in enumerate(self.roles))


def build_reduction(f: CnfFormula) -> ReductionGraph:
    t, s = tail_lengths(f.n, f.m)
    roles: list[str] = []
    index: dict[str, int] = {}

    def add(role):
        index[role] = len(roles)
        roles.append(role)
        return index[role]

    edges = []
    for i in range(1, f.n + 1):
        T, F = add(f"T:{i}"), add(f"F:{i}")
        a = [add(f"a:{i}:{h}") for h in (1, 2)]
        b = [add(f"b:{i}:{h}") for h in (1, 2)]
        d = [add(f"d:{i}:{h}") for h in range(1, t[i - 1] + 1)]
        e = [add(f"e:{i}:{h}") for h in (1, 2)]
        edges += [(a[0], b[0]), (a[1], b[1]), (T, a[0]), (T, a[1]), (F, b[0]), (F, b[1])]
        edges += [(d[0], T), (d[0], F)] + list(zip(d, d[1:])) + [(d[-1], e[0]), (d[-1], e[1])]
    for j in range(1, f.m + 1):
        c = [add(f"c:{j}:{h}") for h in (1, 2, 3)]
        fp = [add(f"f:{j}:{h}") for h in range(1, s[j - 1] + 1)]
        g = [add(f"g:{j}:{h}") for h in (1, 2)]
        edges += [(c[0], c[1]), (c[1], c[2]), (c[1], fp[0])] + list(zip(fp, fp[1:]))
        edges += [(fp[-1], g[0]), (fp[-1], g[1])]
    for j, clause in enumerate(f.clauses, 1):
        c1, c3 = index[f"c:{j}:1"], index[f"c:{j}:3"]
        polarity = {v: pos for v, pos in clause}
        for i in range(1, f.n + 1):
            T, F = index[f"T:{i}"], index[f"F:{i}"]
            edges += [(c1, T), (c1, F)]
            if i not in polarity:
                edges += [(c3, T), (c3, F)]
            elif polarity[i]:
                edges.append((c3, F))
            else:
                edges.append((c3, T))
    graph = from_edge_list(len(roles), edges, roles)
    return ReductionGraph(f, graph, tuple(roles), t, s, index)


def witness_from_assignment(rg: ReductionGraph, a: Assignment) -> tuple[int, ...]:
    f = rg.formula
    if len(a) != f.n:
        raise ValueError(f"assignment has {len(a)} values for {f.n} variables")
    S = [rg.v("e", i, 1) for i in range(1, f.n + 1)]
    S += [rg.v("g", j, 1) for j in range(1, f.m + 1)]
    S += [rg.v("a" if a[i - 1] else "b", i, 1) for i in range(1, f.n + 1)]
    return tuple(sorted(S))


def assignment_from_basis(rg: ReductionGraph, S: Iterable[int]) -> Assignment:
    S = set(S)
    values = []
    for i in range(1, rg.formula.n + 1):
        has_a = any(rg.v("a", i, h) in S for h in (1, 2))
        has_b = any(rg.v("b", i, h) in S for h in (1, 2))
        if has_a == has_b:
            raise ValueError(f"set does not select exactly one side of the selector quad of x_{i}")
        values.append(has_a)
    return tuple(values)


def iter_assignments(n: int):
    """All assignments in lexicographic order, all-false first."""
    return itertools.product((False, True), repeat=n)


def sat_brute_force(f: CnfFormula, max_vars: int = SAT_GUARD) -> Assignment | None:
    if f.n > max_vars:
        raise GuardExceededError(f"{f.n} variables exceed the brute-force guard of {max_vars}")
    return next((a for a in iter_assignments(f.n) if f.satisfied_by(a)), None)


@dataclass
class ReductionReport:
    n: int
    m: int
    vertices: int
    target_k: int
    candidates: int
    examined: int
    sat: bool
    exists_witness: bool
    witness: tuple[int, ...] | None
    witness_roles: tuple[str, ...] | None
    extracted_assignment: Assignment | None
    roundtrip_ok: bool | None
    star_resolving: bool | None

    @property
    def agreement(self) -> bool:
        return self.sat == self.exists_witness

    def to_text(self) -> str:
        def b(x):
            return "none" if x is None else str(x).lower()

        def bits(a):
            return "none" if a is None else "".join("1" if x else "0" for x in a)

        lines = [
            f"variables = {self.n}",
            f"clauses = {self.m}",
            f"vertices = {self.vertices}",
            f"target_k = {self.target_k}",
            f"candidates = {self.candidates}",
            f"examined = {self.examined}",
            f"sat = {b(self.sat)}",
            f"exists_witness = {b(self.exists_witness)}",
            f"agreement = {b(self.agreement)}",
            "witness = " + ("none" if self.witness is None else ",".join(map(str, self.witness))),
            "witness_roles = " + ("none" if self.witness_roles is None else " ".join(self.witness_roles)),
            f"extracted_assignment = {bits(self.extracted_assignment)}",
            f"roundtrip_ok = {b(self.roundtrip_ok)}",
            f"assignment_witness_resolving = {b(self.star_resolving)}",
        ]
        return "\n".join(lines) + "\n"


def verify_reduction(
    f: CnfFormula,
    *,
    max_candidates: int | None = 1 << 24,
    workers: int = 1,
    rg: ReductionGraph | None = None,
    dm: DistanceMatrix | None = None,
) -> ReductionReport:
    """Check both directions of the reduction at budget 2n+m.

    The SAT side comes from ``sat_brute_force``; the graph side from
    exhaustive one-per-group search.  When both succeed, the witness is
    converted back into an assignment that must satisfy ``f``, and the
    assignment-built set must itself be multiset resolving.
    """
    rg = rg or build_reduction(f)
    dm = dm if dm is not None else all_pairs_distances(rg.graph)
    sat_a = sat_brute_force(f)
    stats: dict = {}
    witness = next(
        iter_constrained_witnesses(dm, rg.groups(), max_candidates=max_candidates, workers=workers, stats=stats),
        None,
    )
    extracted = roundtrip = star_ok = None
    if witness is not None:
        extracted = assignment_from_basis(rg, witness)
        roundtrip = f.satisfied_by(extracted)
    if sat_a is not None:
        star_ok = is_multiset_resolving(dm, witness_from_assignment(rg, sat_a))
    return ReductionReport(
        n=f.n,
        m=f.m,
        vertices=rg.graph.n,
        target_k=target_k(f),
        candidates=stats["candidates"],
        examined=stats["examined"],
        sat=sat_a is not None,
        exists_witness=witness is not None,
        witness=witness,
        witness_roles=None if witness is None else tuple(rg.roles[x] for x in witness),
        extracted_assignment=extracted,
        roundtrip_ok=roundtrip,
        star_resolving=star_ok,
    )


def all_polarity_formula(variables: Sequence[int] = (1, 2, 3)) -> CnfFormula:
    """The 2^3 clauses over three variables with every sign pattern (unsatisfiable)."""
    n = max(variables)
    clauses = [tuple((v, p) for v, p in zip(variables, signs)) for signs in itertools.product((True, False), repeat=3)]
    return CnfFormula(n, tuple(clauses))
