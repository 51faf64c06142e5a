import random

import pytest

from indsupport.cdcl import Solver, Status
from indsupport.cnf import CnfFormula, parse_dimacs
from indsupport.generators import random_kcnf
from indsupport.oracle import is_defined, is_satisfiable
from indsupport.padoa import build_padoa, definability_query_assumptions

AND3 = CnfFormula.from_clauses([(-3, 1), (-3, 2), (3, -1, -2)])


def test_unit_instance_layout():
    f = CnfFormula.from_clauses([(1,)])
    inst = build_padoa(f, {1})
    assert inst.y_of == {1: 2} and inst.z_of == {1: 3}
    assert set(inst.psi.clauses) == {(1,), (2,), (-3, -1, 2), (-3, 1, -2)}
    assert inst.psi.num_vars == 3


def test_numbering_rule():
    f = CnfFormula.from_clauses([(1, 2, 3)])
    inst = build_padoa(f, {1, 2})
    assert [inst.y(x) for x in (1, 2, 3)] == [4, 5, 6]
    assert [inst.z(x) for x in (1, 2)] == [7, 8]


def test_clause_count():
    rng = random.Random(3)
    for _ in range(20):
        f = random_kcnf(8, rng.randint(0, 30), 3, rng)
        P = set(rng.sample(range(1, 9), rng.randint(1, 8)))
        assert len(build_padoa(f, P).psi.clauses) == 2 * len(f.clauses) + 2 * len(P)


def test_psi_satisfiable_under_all_selectors():
    rng = random.Random(4)
    for _ in range(40):
        f = random_kcnf(5, rng.randint(3, 15), 3, rng)
        inst = build_padoa(f)
        zs = [inst.z(x) for x in f.projection]
        assert is_satisfiable(inst.psi, zs) == is_satisfiable(f)


def _query(f, P, target, active):
    inst = build_padoa(f, P)
    s = Solver.from_formula(inst.psi)
    return s.solve(definability_query_assumptions(inst, target, active)).status


def test_query_unit():
    f = CnfFormula.from_clauses([(1,)])
    inst = build_padoa(f, {1})
    assert definability_query_assumptions(inst, 1, []) == [1, -2]
    assert _query(f, {1}, 1, []) is Status.UNSAT


def test_query_or_not_defined():
    f = CnfFormula.from_clauses([(1, 2)])
    # witness pair: x = (1, 1), y = (0, 1)
    assert is_satisfiable(build_padoa(f, {1, 2}).psi, [1, 2, -3, 4, 6])
    assert _query(f, {1, 2}, 1, [2]) is Status.SAT


def test_query_and_output_defined():
    assert not is_defined(AND3, 3, {1}) and is_defined(AND3, 3, {1, 2})
    assert _query(AND3, {1, 2, 3}, 3, [1, 2]) is Status.UNSAT


def test_query_rejects_bad_target():
    inst = build_padoa(AND3, {1, 2})
    with pytest.raises(ValueError):
        definability_query_assumptions(inst, 3, [1])
    with pytest.raises(ValueError):
        definability_query_assumptions(inst, 1, [1])


def test_dump_round_trips():
    inst = build_padoa(AND3, {1, 3})
    g = parse_dimacs(inst.to_dimacs())
    assert g.clauses == inst.psi.clauses and g.num_vars == inst.psi.num_vars
