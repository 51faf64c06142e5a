import random
from itertools import product

import pytest

from indsupport.cnf import CnfFormula, build_occurrence_list
from indsupport.gates import (AND, XOR, GateDef, GateIndex, XorConstraint, extract_xor_definitions,
                              find_and_gates_sweep, find_gate_out, find_xor_gates, recover_gates)
from indsupport.generators import add_noise, and_clauses, tseitin_circuit, xor_clauses
from indsupport.oracle import enumerate_solutions


def and_gates(clauses, num_vars=None):
    f = CnfFormula.from_clauses(clauses, num_vars)
    return find_and_gates_sweep(build_occurrence_list(f), f)


def test_and_gate_recovered():
    gates = and_gates([(-3, 1), (-3, 2), (3, -1, -2)])
    assert GateDef(3, AND, (1, 2)) in gates
    assert [g.out for g in gates[3]] == [3]


def test_or_gate_as_and_on_negations():
    gates = and_gates([(3, -1), (3, -2), (-3, 1, 2)])
    (g,) = gates[3]
    assert g.out == -3 and g.op == AND and set(g.inputs) == {-1, -2}


def test_missing_binary_clause_blocks_gate():
    assert and_gates([(-3, 1), (3, -1, -2)])[3] == []


def test_find_gate_out_marks_and_clears():
    f = CnfFormula.from_clauses([(-3, 1), (-3, 2), (3, -1, -2), (3, -1, -4)])
    occ = build_occurrence_list(f)
    marker: dict[int, bool] = {}
    gates = find_gate_out(3, occ, f, marker, GateIndex())
    # (3, -1, -4) needs a mark on 4, which has none
    assert list(gates) == [GateDef(3, AND, (1, 2))]
    assert not any(marker.values())


def test_find_gate_out_early_return():
    f = CnfFormula.from_clauses([(3, -1, -2), (1, 2)])
    occ = build_occurrence_list(f)
    gates = GateIndex()
    marker: dict[int, bool] = {}
    assert len(find_gate_out(3, occ, f, marker, gates)) == 0
    assert not any(marker.values())


def test_gate_index_deduplicates():
    idx = GateIndex()
    assert idx.add(GateDef(3, AND, (1, 2)))
    assert not idx.add(GateDef(3, AND, (2, 1)))
    assert not idx.add(GateDef(-3, AND, (-1, -2)))
    assert idx.add(GateDef(3, XOR, (1, 2)))
    assert len(idx) == 2


def test_gate_def_rejects_self_reference():
    with pytest.raises(ValueError):
        GateDef(3, AND, (3, 1))


def _models_by_parity(clauses, n):
    # independent check: which assignments satisfy the clause set
    f = CnfFormula.from_clauses(clauses, n)
    return {tuple(m[v] for v in range(1, n + 1)) for m in enumerate_solutions(f)}


def test_xor3_detected():
    clauses = [(1, 2, 3), (1, -2, -3), (-1, 2, -3), (-1, -2, 3)]
    models = _models_by_parity(clauses, 3)
    assert models == {a for a in product((False, True), repeat=3) if sum(a) % 2 == 1}
    xors = find_xor_gates(CnfFormula.from_clauses(clauses), 5)
    assert xors == [XorConstraint((1, 2, 3), True)]


def test_xor2_detected():
    clauses = [(1, 2), (-1, -2)]
    assert _models_by_parity(clauses, 2) == {(True, False), (False, True)}
    assert find_xor_gates(CnfFormula.from_clauses(clauses), 5) == [XorConstraint((1, 2), True)]


def test_incomplete_xor_not_reported():
    clauses = [(1, 2, 3), (1, -2, -3), (-1, 2, -3)]
    assert find_xor_gates(CnfFormula.from_clauses(clauses), 5) == []


def test_subsuming_clause_covers_pattern():
    # (1, 2) covers both (1, 2, 3) and (1, 2, -3)
    clauses = [(1, 2), (1, -2, -3), (-1, 2, -3), (-1, -2, 3)]
    assert XorConstraint((1, 2, 3), True) in find_xor_gates(CnfFormula.from_clauses(clauses), 5)


def test_even_parity_xor():
    clauses = xor_clauses([1, 2, 3, 4], rhs=False)
    assert find_xor_gates(CnfFormula.from_clauses(clauses), 5) == [XorConstraint((1, 2, 3, 4), False)]


def test_xor_max_len_respected():
    clauses = xor_clauses([1, 2, 3, 4, 5])
    f = CnfFormula.from_clauses(clauses)
    assert find_xor_gates(f, 4) == []
    assert len(find_xor_gates(f, 5)) == 1
    with pytest.raises(ValueError):
        find_xor_gates(f, 6)


def test_extract_xor3_definitions():
    defs = extract_xor_definitions(XorConstraint((1, 2, 3), True))
    assert defs == [GateDef(-1, XOR, (2, 3)), GateDef(-2, XOR, (1, 3)), GateDef(-3, XOR, (1, 2))]


def test_extract_xor2_definitions_are_equivalences():
    defs = extract_xor_definitions(XorConstraint((1, 2), True))
    assert defs == [GateDef(-1, XOR, (2,)), GateDef(-2, XOR, (1,))]
    for a, b in [(True, False), (False, True)]:
        assert all(d.holds({1: a, 2: b}) for d in defs)


@pytest.mark.parametrize("k", [2, 3, 4, 5])
def test_length_k_xor_yields_k_definitions(k):
    assert len(extract_xor_definitions(XorConstraint(tuple(range(1, k + 1)), True))) == k


def _entailed(f, gate):
    return all(gate.holds(m) for m in enumerate_solutions(f))


def test_recovered_gates_are_entailed():
    rng = random.Random(7)
    checked = 0
    for _ in range(150):
        f = tseitin_circuit(rng.randint(2, 5), rng.randint(1, 8), rng)
        f = add_noise(f, rng.randint(0, 4), rng.choice([2, 3]), rng)
        for g in recover_gates(f, 5):
            assert _entailed(f, g), g
            checked += 1
    assert checked > 300


def test_planted_and_patterns_recovered():
    rng = random.Random(11)
    for _ in range(100):
        n = 10
        out, a, b = rng.sample(range(1, n + 1), 3)
        lits = [x if rng.random() < 0.5 else -x for x in (out, a, b)]
        planted = and_clauses(*lits)
        f = add_noise(CnfFormula.from_clauses(planted, n), 5, 3, rng)
        gates = recover_gates(f, 5)
        # the index keys on variables, so match on variables too
        assert any(g.op == AND and set(g.input_vars) == {a, b} for g in gates[out])


def test_planted_xor_found_iff_complete():
    rng = random.Random(5)
    for _ in range(100):
        k = rng.randint(2, 5)
        vs = rng.sample(range(1, 11), k)
        rhs = rng.random() < 0.5
        full = xor_clauses(vs, rhs)
        target = XorConstraint(tuple(sorted(vs)), rhs)
        f = CnfFormula.from_clauses(full, 10)
        assert target in find_xor_gates(f, 5)
        drop = rng.randrange(len(full))
        partial = CnfFormula.from_clauses(full[:drop] + full[drop + 1:], 10)
        assert target not in find_xor_gates(partial, 5)


def test_and_sweep_tries_both_polarities():
    # out = -3 as an AND output: clauses (3, 1), (3, 2), (-3, -1, -2)
    gates = and_gates([(3, 1), (3, 2), (-3, -1, -2)])
    assert GateDef(-3, AND, (1, 2)) in gates
