import itertools
import random
from collections import Counter

import pytest

from msetdim.codes import is_multiset_resolving, multiset_rep
from msetdim.errors import FormulaError, GuardExceededError
from msetdim.graph import all_pairs_distances, is_connected, twin_classes
from msetdim.reduction import (
    CnfFormula,
    all_polarity_formula,
    assignment_from_basis,
    build_reduction,
    iter_assignments,
    parse_dimacs,
    sat_brute_force,
    tail_lengths,
    target_k,
    verify_reduction,
    witness_from_assignment,
)
from msetdim.solver import iter_constrained_witnesses, multiset_dimension, resolving_subsets

F1 = CnfFormula.from_ints(3, [[1, 2, -3]])


@pytest.fixture(scope="module")
def rg1():
    rg = build_reduction(F1)
    return rg, all_pairs_distances(rg.graph)


def test_parse_dimacs_roundtrip():
    text = "c example\np cnf 3 2\n1 2 -3 0\n-1\n 2 3 0\n"
    f = parse_dimacs(text)
    assert f.n == 3 and f.clauses == (((1, True), (2, True), (3, False)), ((1, False), (2, True), (3, True)))
    assert parse_dimacs(f.to_dimacs()) == f


@pytest.mark.parametrize(
    "text,line",
    [
        ("p cnf 3 1\n1 2 0\n", 2),
        ("p cnf 3 1\n1 -1 2 0\n", 2),
        ("p cnf 3 1\n1 1 2 0\n", 2),
        ("p cnf 3 1\n1 2 4 0\n", 2),
        ("p cnf 3 1\n\n1 2 x 0\n", 3),
        ("1 2 3 0\n", 1),
        ("p cnf 3\n", 1),
        ("p cnf 3 1\np cnf 3 1\n", 2),
        ("p cnf 3 1\n1 2 3\n", 2),
    ],
)
def test_parse_errors_name_line(text, line):
    with pytest.raises(FormulaError, match=rf"^line {line}: "):
        parse_dimacs(text)


def test_parse_errors_without_line():
    with pytest.raises(FormulaError, match="declares 2 clauses"):
        parse_dimacs("p cnf 3 2\n1 2 3 0\n")
    with pytest.raises(FormulaError, match="missing problem line"):
        parse_dimacs("c nothing\n")


def test_tails_and_target():
    assert tail_lengths(3, 1) == ((10, 15, 20), (25,))
    assert target_k(F1) == 7
    assert target_k(CnfFormula(1, ())) == 2
    assert target_k(all_polarity_formula()) == 14


def test_vertex_count_and_shape(rg1):
    rg, _ = rg1
    t, s = rg.t, rg.s
    assert rg.graph.n == sum(8 + x for x in t) + sum(5 + x for x in s) == 99
    assert is_connected(rg.graph)
    assert len(set(rg.roles)) == rg.graph.n
    G = rg.graph
    for i in (1, 2, 3):
        assert not G.has_edge(rg.v("T", i), rg.v("F", i))
        assert not G.has_edge(rg.v("e", i, 1), rg.v("e", i, 2))
        assert len(rg.variable_gadget(i)) == 8 + t[i - 1]
    assert len(rg.clause_gadget(1)) == 5 + s[0]
    # x3 is negative in the clause: c3 sees T3 only; x1, x2 positive: c3 sees F only
    c3 = rg.v("c", 1, 3)
    assert [G.has_edge(c3, rg.v(x, i)) for i in (1, 2, 3) for x in "TF"] == [False, True, False, True, True, False]


def test_reduction_twins(rg1):
    rg, _ = rg1
    pairs = {cls for cls, _ in twin_classes(rg.graph)}
    expect = {(rg.v("e", i, 1), rg.v("e", i, 2)) for i in (1, 2, 3)} | {(rg.v("g", 1, 1), rg.v("g", 1, 2))}
    assert pairs == expect
    assert all(kind == "open" for _, kind in twin_classes(rg.graph))


def test_sat_brute_force():
    assert sat_brute_force(F1) == (False, False, False)
    assert sat_brute_force(all_polarity_formula()) is None
    assert list(iter_assignments(2)) == [(False, False), (False, True), (True, False), (True, True)]
    with pytest.raises(GuardExceededError):
        sat_brute_force(CnfFormula(21, ()))


def test_witness_rules(rg1):
    rg, dm = rg1
    a = (True, False, True)
    S = witness_from_assignment(rg, a)
    assert len(S) == 7
    assert {rg.roles[x] for x in S} == {"e:1:1", "e:2:1", "e:3:1", "g:1:1", "a:1:1", "b:2:1", "a:3:1"}
    assert assignment_from_basis(rg, S) == a
    for a in iter_assignments(3):
        # the one falsifying assignment leaves c3 and c1 with equal codes
        assert is_multiset_resolving(dm, witness_from_assignment(rg, a)) == F1.satisfied_by(a)
    with pytest.raises(ValueError):
        assignment_from_basis(rg, [rg.v("e", 1, 1)])
    with pytest.raises(ValueError):
        witness_from_assignment(rg, (True,))


def _star(rg):
    return witness_from_assignment(rg, sat_brute_force(rg.formula))


def test_t_pattern_outside_gadget(rg1):
    rg, dm = rg1
    n, m = rg.formula.n, rg.formula.m
    S = _star(rg)
    for i in range(1, n + 1):
        outside = [x for x in S if x not in rg.variable_gadget(i)]
        expect = Counter({3: n - 1})
        expect.update(rg.t[k - 1] + 3 for k in range(1, n + 1) if k != i)
        expect.update(rg.s[j - 1] + 3 for j in range(1, m + 1))
        assert Counter(multiset_rep(dm, rg.v("T", i), outside).entries) == expect


def test_t_to_far_tip_distance(rg1):
    rg, dm = rg1
    for i, k in itertools.permutations(range(1, 4), 2):
        assert dm[rg.v("T", i), rg.v("e", k, 1)] == rg.t[k - 1] + 3


def test_c3_differs_from_c1_by_swaps(rg1):
    rg, dm = rg1
    for a in iter_assignments(3):
        if not F1.satisfied_by(a):
            continue
        S = witness_from_assignment(rg, a)
        c1 = Counter(multiset_rep(dm, rg.v("c", 1, 1), S).entries)
        c3 = Counter(multiset_rep(dm, rg.v("c", 1, 3), S).entries)
        swaps = c3[3] - c1[3]
        assert swaps >= 1 and c1[2] - c3[2] == swaps
        assert +(c1 - Counter({2: c1[2], 3: c1[3]})) == +(c3 - Counter({2: c3[2], 3: c3[3]}))


def test_quad_members_collide_without_quad_landmark(rg1):
    rg, dm = rg1
    S_all = [x for x in range(rg.graph.n) if x not in {rg.v(y, 1, h) for y in "ab" for h in (1, 2)}]
    # without a landmark in the quad, a_1^1 and a_1^2 see every other vertex at the same distance
    for x in S_all:
        assert dm[rg.v("a", 1, 1), x] == dm[rg.v("a", 1, 2), x]
        assert dm[rg.v("b", 1, 1), x] == dm[rg.v("b", 1, 2), x]


def test_group_hit_for_every_size_7_resolving_set_found(rg1):
    rg, dm = rg1
    groups = [set(g) for g in rg.groups()]
    hits = list(iter_constrained_witnesses(dm, rg.groups()))
    assert hits
    for S in hits:
        assert all(len(g & set(S)) == 1 for g in groups)
        assert F1.satisfied_by(assignment_from_basis(rg, S))


def test_verify_reduction_satisfiable(rg1):
    rg, dm = rg1
    rep = verify_reduction(F1, rg=rg, dm=dm)
    assert rep.sat and rep.exists_witness and rep.agreement
    assert rep.roundtrip_ok and rep.star_resolving
    assert rep.candidates == 2 * 2 * 2 * 2 * 4 * 4 * 4 == 1024
    assert len(rep.witness) == 7
    text = rep.to_text()
    assert "target_k = 7\n" in text and "agreement = true\n" in text


def test_verify_reduction_guard():
    with pytest.raises(GuardExceededError):
        verify_reduction(F1, max_candidates=100)


def _random_formula(rng, n, m):
    clauses = []
    for _ in range(m):
        vs = rng.sample(range(1, n + 1), 3)
        clauses.append([v if rng.random() < 0.5 else -v for v in vs])
    return CnfFormula.from_ints(n, clauses)


def test_seeded_instances_agree():
    rng = random.Random(8)
    for _ in range(20):
        f = _random_formula(rng, 3, rng.choice([1, 2]))
        rep = verify_reduction(f)
        assert rep.agreement, f.to_dimacs()
        if rep.exists_witness:
            assert rep.roundtrip_ok and rep.star_resolving


def test_single_variable_without_clauses_degenerates():
    # no 2-set ever resolves, so the budget 2n+m = 2 is unreachable even though f is satisfiable
    f = CnfFormula(1, ())
    rg = build_reduction(f)
    dm = all_pairs_distances(rg.graph)
    rep = verify_reduction(f, rg=rg, dm=dm)
    assert rep.sat and not rep.exists_witness and not rep.agreement
    assert list(resolving_subsets(dm, 2)) == []
    assert multiset_dimension(rg.graph).value == 3


def test_two_variables_without_clauses_is_disconnected():
    assert not is_connected(build_reduction(CnfFormula(2, ())).graph)
