"""Syntactic recovery of AND and XOR gate definitions from a clause database."""

from __future__ import annotations

from collections.abc import Iterator, Mapping
from dataclasses import dataclass
from itertools import combinations

from .cnf import CnfFormula, build_occurrence_list

AND = "AND"
XOR = "XOR"


@dataclass(frozen=True)
class GateDef:
    """``out == op(inputs)`` over DIMACS literals."""

    out: int
    op: str
    inputs: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "inputs", tuple(self.inputs))
        if self.op not in (AND, XOR):
            raise ValueError(f"unknown gate op {self.op!r}")
        if abs(self.out) in {abs(l) for l in self.inputs}:
            raise ValueError("gate output variable occurs among its inputs")
        if not self.inputs:
            raise ValueError("gate needs at least one input")

    @property
    def out_var(self) -> int:
        return abs(self.out)

    @property
    def input_vars(self) -> tuple[int, ...]:
        return tuple(abs(l) for l in self.inputs)

    def holds(self, value: Mapping[int, bool]) -> bool:
        """Check the definition under a total assignment ``value[var] -> bool``."""
        def lit_val(l: int) -> bool:
            return value[abs(l)] if l > 0 else not value[abs(l)]

        if self.op == AND:
            rhs = all(lit_val(l) for l in self.inputs)
        else:
            rhs = False
            for l in self.inputs:
                rhs ^= lit_val(l)
        return lit_val(self.out) == rhs

    def __str__(self) -> str:
        return f"{self.out} = {self.op}({', '.join(map(str, self.inputs))})"


class GateIndex:
    """Gates grouped by output variable, in recovery order, without duplicates."""

    def __init__(self):
        self._by_out: dict[int, list[GateDef]] = {}
        self._keys: set[tuple] = set()

    @staticmethod
    def _key(g: GateDef) -> tuple:
        return (g.out_var, tuple(sorted(g.input_vars)), g.op)

    def add(self, gate: GateDef) -> bool:
        key = self._key(gate)
        if key in self._keys:
            return False
        self._keys.add(key)
        self._by_out.setdefault(gate.out_var, []).append(gate)
        return True

    def __getitem__(self, var: int) -> list[GateDef]:
        return self._by_out.get(var, [])

    def __contains__(self, gate: GateDef) -> bool:
        return self._key(gate) in self._keys

    def __iter__(self) -> Iterator[GateDef]:
        for gates in self._by_out.values():
            yield from gates

    def __len__(self) -> int:
        return len(self._keys)

    def outputs(self) -> list[int]:
        return sorted(self._by_out)


def find_gate_out(out_lit: int, occ: Mapping[int, list[int]], f: CnfFormula,
                  marker: dict[int, bool], gates: GateIndex) -> GateIndex:
    """Collect AND gates with output ``out_lit`` into ``gates``.

    ``marker`` is caller-owned scratch; it is left clear on return.
    """
    to_clear = []
    for ci in occ[-out_lit]:
        clause = f.clauses[ci]
        if len(clause) == 2:
            lit2 = clause[0] if clause[1] == -out_lit else clause[1]
            marker[lit2] = True
            to_clear.append(lit2)

    if not to_clear:
        return gates

    for ci in occ[out_lit]:
        clause = f.clauses[ci]
        # only 2-input AND gates are searched
        if len(clause) != 3:
            continue
        if all(l == out_lit or marker.get(-l, False) for l in clause):
            inputs = tuple(-l for l in clause if l != out_lit)
            gates.add(GateDef(out_lit, AND, inputs))

    for l in to_clear:
        marker[l] = False
    return gates


def find_and_gates_sweep(occ: Mapping[int, list[int]], f: CnfFormula) -> GateIndex:
    gates = GateIndex()
    marker: dict[int, bool] = {}
    for var in f.variables:
        find_gate_out(var, occ, f, marker, gates)
        find_gate_out(-var, occ, f, marker, gates)
    return gates


@dataclass(frozen=True)
class XorConstraint:
    """``vars[0] ^ ... ^ vars[k-1] == rhs`` over positive variables."""

    vars: tuple[int, ...]
    rhs: bool

    def holds(self, value: Mapping[int, bool]) -> bool:
        acc = False
        for v in self.vars:
            acc ^= value[v]
        return acc == self.rhs


def _forbids(clause_lits: tuple[int, ...], assignment: dict[int, bool]) -> bool:
    # a clause rules out an assignment iff it falsifies every literal
    return all(assignment[abs(l)] != (l > 0) for l in clause_lits)


def find_xor_gates(f: CnfFormula, max_len: int = 5) -> list[XorConstraint]:
    """Recover parity constraints of length 2..max_len encoded directly as clauses.

    A length-k constraint is reported when every one of its 2^(k-1) forbidden
    assignments is ruled out by a clause over a subset of its variables.
    Candidates are seeded by clauses of exactly length k.
    """
    if not 2 <= max_len <= 5:
        raise ValueError("max_len must be in 2..5")
    by_varset: dict[frozenset[int], list[tuple[int, ...]]] = {}
    for c in f.clauses:
        if len(c) <= max_len:
            by_varset.setdefault(frozenset(abs(l) for l in c), []).append(c)

    found: list[XorConstraint] = []
    seen: set[tuple[tuple[int, ...], bool]] = set()
    for varset, group in by_varset.items():
        k = len(varset)
        if k < 2:
            continue
        vs = tuple(sorted(varset))
        for rhs in (True, False):
            if (vs, rhs) in seen:
                continue
            # seed needs a full-length clause ruling out a wrong-parity assignment
            want_neg_parity = 0 if rhs else 1
            if not any(sum(l < 0 for l in c) % 2 == want_neg_parity for c in group):
                continue
            covering = [c for r in range(1, k + 1) for sub in combinations(vs, r)
                        for c in by_varset.get(frozenset(sub), ())]
            ok = True
            for bits in range(1 << k):
                parity = bin(bits).count("1") & 1
                if parity == rhs:
                    continue
                assignment = {v: bool(bits >> i & 1) for i, v in enumerate(vs)}
                if not any(_forbids(c, assignment) for c in covering):
                    ok = False
                    break
            if ok:
                seen.add((vs, rhs))
                found.append(XorConstraint(vs, rhs))
    found.sort(key=lambda x: (len(x.vars), x.vars, not x.rhs))
    return found


def extract_xor_definitions(xor: XorConstraint) -> list[GateDef]:
    """One definition per variable: ``v = XOR(others)`` or ``-v = XOR(others)``."""
    if len(xor.vars) < 2:
        raise ValueError("XOR needs at least two variables")
    defs = []
    for v in xor.vars:
        others = tuple(u for u in xor.vars if u != v)
        defs.append(GateDef(-v if xor.rhs else v, XOR, others))
    return defs


def recover_gates(f: CnfFormula, xor_max_len: int = 5, occ=None) -> GateIndex:
    """AND gates first (ascending output variable), then XOR definitions."""
    if occ is None:
        occ = build_occurrence_list(f)
    gates = find_and_gates_sweep(occ, f)
    if xor_max_len >= 2:
        for x in find_xor_gates(f, xor_max_len):
            for g in extract_xor_definitions(x):
                gates.add(g)
    return gates
