import random

import pytest

from indsupport.cdcl import Solver, Status, luby
from indsupport.cnf import CnfFormula
from indsupport.generators import random_kcnf
from indsupport.oracle import entails_clause, is_satisfiable


def solver(clauses, n):
    s = Solver(n)
    s.add_clauses(clauses)
    return s


def test_contradictory_units():
    s = solver([(1,), (-1,)], 1)
    assert not s.ok
    assert s.solve().status is Status.UNSAT


def test_empty_clause():
    s = Solver(2)
    assert not s.add_clause([])
    assert s.solve().status is Status.UNSAT


def test_simple_sat():
    assert solver([(1, 2)], 2).solve([]).status is Status.SAT


def test_add_clause_range_check():
    with pytest.raises(ValueError):
        Solver(2).add_clause([3])


def test_assumption_propagates():
    out = solver([(-1, 2)], 2).solve([1])
    assert out.status is Status.SAT and out.model == {1: True, 2: True}


def test_assumption_falsified_at_level_zero():
    assert solver([(-1,)], 1).solve([1]).status is Status.UNSAT


def test_zero_budget_gives_unknown():
    f = random_kcnf(60, 256, 3, seed=1)
    assert Solver.from_formula(f).solve([], conflict_limit=0).status is Status.UNKNOWN


def test_propagate_chain():
    s = solver([(-1, 2), (-2, 3)], 3)
    s.new_decision_level()
    s.enqueue(1)
    assert s.propagate() is None
    assert s.trail() == [1, 2, 3]
    assert s.check_trail()


def test_propagate_conflict():
    s = solver([(-1, 2), (-1, -2)], 2)
    s.new_decision_level()
    s.enqueue(1)
    assert s.propagate() is not None


def test_propagate_nothing_pending():
    assert solver([(1, 2)], 2).propagate() is None


def test_first_uip_learning():
    s = solver([(-1, -2, 3), (-3, 4), (-3, -4)], 4)
    s.new_decision_level()
    s.enqueue(1)
    assert s.propagate() is None
    s.new_decision_level()
    s.enqueue(2)
    confl = s.propagate()
    assert confl is not None
    learnt, bj = s.analyze_conflict()
    # x3 is the first UIP at level 2: the learnt clause is (-3)
    assert learnt == [-3]
    assert bj == 0
    assert all(s.value(l) is False for l in learnt)
    s.learn(learnt, bj)
    assert s.decision_level() == 0 and s.value(-3) is True


def test_learnt_with_backjump_level():
    # level 1: x1, level 2: x5 (unrelated), level 3: x2 -> conflict via x3
    s = solver([(-1, -2, 3), (-1, -3, 4), (-3, -4)], 5)
    for lit in (1, 5, 2):
        s.new_decision_level()
        s.enqueue(lit)
        confl = s.propagate()
    assert confl is not None
    learnt, bj = s.analyze_conflict()
    assert learnt[0] == -3 and set(learnt) == {-3, -1}
    assert bj == 1
    s.learn(learnt, bj)
    assert s.value(-3) is True and s.decision_level() == 1


def test_conflict_analysis_needs_level():
    with pytest.raises(ValueError):
        Solver(1).analyze_conflict([1])


def test_backtrack():
    s = Solver(6)
    for v in range(1, 6):
        s.new_decision_level()
        s.enqueue(v)
    s.backtrack_until(2)
    assert s.decision_level() == 2
    assert s.trail() == [1, 2]
    assert all(s.value(v) is None for v in (3, 4, 5))
    s.backtrack_until(2)
    assert s.decision_level() == 2
    s.backtrack_until(0)
    assert s.trail() == []


def test_backtrack_saves_polarity():
    s = Solver(2)
    s.add_clause([-1])
    s.new_decision_level()
    s.enqueue(2)
    s.backtrack_until(0)
    assert s.pick_branch_literal() == 2


def test_pick_branch():
    s = Solver(3)
    assert s.pick_branch_literal() == -1
    s.add_clause([1])
    s.add_clause([2])
    s.add_clause([3])
    assert s.pick_branch_literal() is None


def test_pick_branch_follows_activity():
    s = Solver(8)
    for _ in range(3):
        s._bump(7)
    assert abs(s.pick_branch_literal()) == 7


def test_luby():
    assert [luby(i) for i in range(15)] == [1, 1, 2, 1, 1, 2, 4, 1, 1, 2, 1, 1, 2, 4, 8]


def _clauses_satisfied(clauses, model):
    return all(any(model[abs(l)] == (l > 0) for l in c) for c in clauses)


def test_agrees_with_enumeration():
    rng = random.Random(42)
    for _ in range(300):
        n = rng.randint(3, 16)
        f = random_kcnf(n, rng.randint(1, 6 * n), 3, rng)
        s = Solver.from_formula(f)
        out = s.solve()
        assert (out.status is Status.SAT) == is_satisfiable(f)
        if out.status is Status.SAT:
            assert _clauses_satisfied(f.clauses, out.model)
        assumps = [v if rng.random() < 0.5 else -v for v in rng.sample(range(1, n + 1), rng.randint(1, n))]
        out = s.solve(assumps)
        assert (out.status is Status.SAT) == is_satisfiable(f, assumps)
        if out.status is Status.SAT:
            assert _clauses_satisfied(f.clauses, out.model)
            assert all(out.model[abs(l)] == (l > 0) for l in assumps)
        assert s.decision_level() == 0


def test_learnt_clauses_entailed():
    rng = random.Random(17)
    seen = 0
    for _ in range(60):
        n = rng.randint(10, 16)
        f = random_kcnf(n, int(4.3 * n), 3, rng)
        s = Solver.from_formula(f)
        s.solve()
        for c in s.learnt_clauses():
            assert entails_clause(f, c)
            seen += 1
    assert seen > 20


def test_deterministic():
    f = random_kcnf(40, 170, 3, seed=9)
    a, b = Solver.from_formula(f, seed=3), Solver.from_formula(f, seed=3)
    ra, rb = a.solve([1, -2]), b.solve([1, -2])
    assert ra == rb and a.stats == b.stats


def test_incremental_reuse():
    f = CnfFormula.from_clauses([(1, 2), (-1, 3), (-2, 3)])
    s = Solver.from_formula(f)
    assert s.solve([-3]).status is Status.UNSAT
    assert s.solve([3]).status is Status.SAT
    assert s.solve([-1, -2]).status is Status.UNSAT
    assert s.solve().status is Status.SAT
