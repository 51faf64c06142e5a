"""Seeded generators for small test and demo instances."""

from __future__ import annotations

import random
from itertools import product

from .cnf import CnfFormula


def _rng(seed) -> random.Random:
    return seed if isinstance(seed, random.Random) else random.Random(seed)


def random_kcnf(num_vars: int, num_clauses: int, k: int = 3, seed=0) -> CnfFormula:
    rng = _rng(seed)
    clauses = []
    for _ in range(num_clauses):
        vs = rng.sample(range(1, num_vars + 1), min(k, num_vars))
        clauses.append([v if rng.random() < 0.5 else -v for v in vs])
    return CnfFormula.from_clauses(clauses, num_vars)


def and_clauses(out: int, a: int, b: int) -> list[list[int]]:
    """Tseitin clauses for ``out <-> a & b`` over literals."""
    return [[-out, a], [-out, b], [out, -a, -b]]


def or_clauses(out: int, a: int, b: int) -> list[list[int]]:
    return [[out, -a], [out, -b], [-out, a, b]]


def xor_clauses(lits, rhs: bool = True) -> list[list[int]]:
    """The 2^(k-1) clauses of ``lits[0] ^ ... ^ lits[-1] == rhs``."""
    lits = list(lits)
    out = []
    for signs in product((False, True), repeat=len(lits)):
        # keep clauses whose falsifying assignment has the wrong parity
        falsified_parity = sum(1 for l, neg in zip(lits, signs) if neg == (l > 0)) % 2
        if falsified_parity != rhs:
            out.append([-l if neg else l for l, neg in zip(lits, signs)])
    return out


def tseitin_circuit(num_inputs: int, num_gates: int, seed=0, ops=("AND", "OR", "XOR")) -> CnfFormula:
    """Random circuit: inputs are 1..num_inputs, each gate output a fresh variable."""
    rng = _rng(seed)
    clauses: list[list[int]] = []
    nodes = list(range(1, num_inputs + 1))
    v = num_inputs
    for _ in range(num_gates):
        v += 1
        a, b = rng.sample(nodes, 2)
        a = a if rng.random() < 0.7 else -a
        b = b if rng.random() < 0.7 else -b
        op = rng.choice(ops)
        if op == "AND":
            clauses += and_clauses(v, a, b)
        elif op == "OR":
            clauses += or_clauses(v, a, b)
        else:
            clauses += xor_clauses([v, a, b], rhs=False)
        nodes.append(v)
    return CnfFormula.from_clauses(clauses, v)


def xor_chain(length: int, count: int, seed=0) -> CnfFormula:
    """``count`` parity constraints of ``length`` variables, consecutive ones sharing one variable."""
    rng = _rng(seed)
    clauses: list[list[int]] = []
    next_var = 1
    prev = None
    for _ in range(count):
        vs = [] if prev is None else [prev]
        while len(vs) < length:
            vs.append(next_var)
            next_var += 1
        lits = [x if rng.random() < 0.5 else -x for x in vs]
        clauses += xor_clauses(lits, rhs=rng.random() < 0.5)
        prev = vs[-1]
    return CnfFormula.from_clauses(clauses, next_var - 1)


def add_noise(f: CnfFormula, num_clauses: int, k: int = 3, seed=0) -> CnfFormula:
    rng = _rng(seed)
    noise = random_kcnf(f.num_vars, num_clauses, k, rng).clauses
    return CnfFormula.from_clauses(list(f.clauses) + list(noise), f.num_vars,
                                   f.projection)


def random_projection(f: CnfFormula, seed=0, min_frac: float = 0.4) -> CnfFormula:
    rng = _rng(seed)
    n = f.num_vars
    size = rng.randint(max(1, int(min_frac * n)), n)
    return f.with_projection(rng.sample(range(1, n + 1), size))


def shared_input_and_family(num_gates: int, num_inputs: int = 8, seed=0) -> CnfFormula:
    """``num_gates`` AND gates over pairs drawn from a fixed input pool.

    Gates do not feed each other; with the pool fixed, the dependent outputs
    dominate the projection set as ``num_gates`` grows.
    """
    rng = _rng(seed)
    clauses: list[list[int]] = []
    for g in range(num_gates):
        out = num_inputs + g + 1
        a, b = rng.sample(range(1, num_inputs + 1), 2)
        clauses += and_clauses(out, a, b)
    return CnfFormula.from_clauses(clauses, num_inputs + num_gates)


def random_unsat(num_vars: int, seed=0, max_tries: int = 1000) -> CnfFormula:
    """Random 3-CNF well above the threshold, confirmed UNSAT by enumeration."""
    from .oracle import is_satisfiable

    rng = _rng(seed)
    for _ in range(max_tries):
        f = random_kcnf(num_vars, int(7 * num_vars), 3, rng)
        if not is_satisfiable(f):
            return f
    raise RuntimeError("could not generate an UNSAT instance")
