"""Greedy elimination of projection variables that have recovered gate definitions."""

from __future__ import annotations

from collections.abc import Iterable, Mapping
from dataclasses import dataclass, field

from .cnf import CnfFormula, build_occurrence_list, compute_incidence
from .gates import GateDef, GateIndex, recover_gates


@dataclass
class DepGraph:
    vertices: frozenset[int]
    edges: set[tuple[int, int]] = field(default_factory=set)

    def roots(self) -> set[int]:
        has_incoming = {v for _, v in self.edges}
        return set(self.vertices) - has_incoming

    def successors(self, u: int) -> list[int]:
        return sorted(v for a, v in self.edges if a == u)

    def is_acyclic(self) -> bool:
        indeg = dict.fromkeys(self.vertices, 0)
        for _, v in self.edges:
            indeg[v] += 1
        stack = [v for v, d in indeg.items() if d == 0]
        seen = 0
        while stack:
            u = stack.pop()
            seen += 1
            for v in self.successors(u):
                indeg[v] -= 1
                if indeg[v] == 0:
                    stack.append(v)
        return seen == len(self.vertices)


@dataclass
class ExplicitResult:
    support: set[int]
    removed: list[tuple[int, GateDef]] = field(default_factory=list)


def build_dependency_graph(gates: GateIndex | Iterable[GateDef], projection: Iterable[int]) -> DepGraph:
    """Edge ``u -> v`` for each gate defining ``v`` with ``u`` among its inputs.

    Only projection variables are vertices; edges touching other variables are dropped.
    """
    P = frozenset(projection)
    g = DepGraph(P)
    for gate in gates:
        v = gate.out_var
        if v not in P:
            continue
        for u in gate.input_vars:
            if u in P:
                g.edges.add((u, v))
    return g


def sort_by_incidence(projection: Iterable[int], incidence: Mapping[int, int]) -> list[int]:
    """Ascending incidence, ties by ascending variable id."""
    return sorted(projection, key=lambda v: (incidence.get(v, 0), v))


def greedy_ind_search(gates: GateIndex, projection: Iterable[int],
                      incidence: Mapping[int, int]) -> ExplicitResult:
    P = set(projection)
    removed: list[tuple[int, GateDef]] = []
    for u in sort_by_incidence(P, incidence):
        for g in gates[u]:
            # an input outside the live set could close a cycle
            if all(v in P for v in g.input_vars):
                P.discard(u)
                removed.append((u, g))
                break
    return ExplicitResult(P, removed)


def check_removal_order(result: ExplicitResult) -> bool:
    """Every removed variable's gate inputs are in the support or removed later."""
    later = set(result.support)
    for u, g in reversed(result.removed):
        if not all(v in later for v in g.input_vars):
            return False
        later.add(u)
    return True


def explicit_search(f: CnfFormula, projection: Iterable[int] | None = None,
                    xor_max_len: int = 5, gates: GateIndex | None = None) -> ExplicitResult:
    P = f.projection if projection is None else frozenset(projection)
    occ = build_occurrence_list(f)
    if gates is None:
        gates = recover_gates(f, xor_max_len, occ)
    return greedy_ind_search(gates, P, compute_incidence(f))
