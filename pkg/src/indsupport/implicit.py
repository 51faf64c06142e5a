"""Implicit definability search over the Padoa duplication.

Two drivers share one query order:

* :func:`simple_search` issues one assumption-based ``solve`` per projection
  variable, re-inserting every selector each time.
* :func:`integrated_implicit` keeps all selectors on the solver trail and
  edits the assumption tail in place, so a dependent variable costs a
  constant number of insertions.
"""

from __future__ import annotations

import time
from collections.abc import Iterable, Mapping
from dataclasses import dataclass

from .cdcl import Solver, SolverTimeout, Status, _to_int
from .cnf import CnfFormula, compute_incidence
from .padoa import PadoaInstance, build_padoa

DEFAULT_CONFLICT_BUDGET = 500


class SearchTimeout(Exception):
    """Wall-clock deadline hit; ``partial`` holds the support decided so far."""

    def __init__(self, partial: list[int], stats: ImplicitStats):
        super().__init__("implicit search timed out")
        self.partial = partial
        self.stats = stats


@dataclass
class ImplicitStats:
    queries: int = 0
    unsat: int = 0
    sat: int = 0
    unknown: int = 0
    unconstrained: int = 0
    assumption_insertions: int = 0
    propagations: int = 0
    propagate_calls: int = 0
    conflicts: int = 0
    decisions: int = 0

    def absorb(self, solver: Solver) -> None:
        s = solver.stats
        self.assumption_insertions = s.assumption_insertions
        self.propagations = s.propagations
        self.propagate_calls = s.propagate_calls
        self.conflicts = s.conflicts
        self.decisions = s.decisions


def query_order(projection: Iterable[int], incidence: Mapping[int, int]) -> list[int]:
    """Descending incidence, ties by descending id; pop from the back.

    The back of the list is therefore the least-incident variable, the one
    most likely to be dependent.
    """
    return sorted(projection, key=lambda v: (incidence.get(v, 0), v), reverse=True)


def _split_unconstrained(f: CnfFormula, projection: Iterable[int],
                         incidence: Mapping[int, int]) -> tuple[list[int], list[int]]:
    free = sorted(v for v in projection if incidence.get(v, 0) == 0)
    rest = [v for v in projection if incidence.get(v, 0) != 0]
    return free, rest


def simple_search(f: CnfFormula, projection: Iterable[int] | None = None,
                  budget: int | None = DEFAULT_CONFLICT_BUDGET,
                  stats: ImplicitStats | None = None,
                  deadline: float | None = None) -> list[int]:
    """One Padoa query per variable; a variable joins the support unless UNSAT.

    ``budget`` is the per-query conflict limit (``None`` for unlimited).
    Returns the support in classification order.
    """
    P = set(f.projection if projection is None else projection)
    stats = stats if stats is not None else ImplicitStats()
    inc = compute_incidence(f)
    independent, rest = _split_unconstrained(f, P, inc)
    stats.unconstrained = len(independent)
    if not rest:
        return independent

    inst = build_padoa(f, P)
    solver = Solver.from_formula(inst.psi)
    unknown = query_order(rest, inc)
    while unknown:
        if deadline is not None and time.monotonic() > deadline:
            stats.absorb(solver)
            raise SearchTimeout(independent, stats)
        index = unknown.pop()
        assumps = [inst.z(j) for j in independent]
        assumps += [inst.z(j) for j in unknown]
        assumps += [index, -inst.y(index)]
        stats.queries += 1
        try:
            ret = solver.solve(assumps, budget, deadline)
        except SolverTimeout:
            stats.absorb(solver)
            raise SearchTimeout(independent, stats) from None
        if ret.status is Status.UNSAT:
            stats.unsat += 1
        else:
            if ret.status is Status.SAT:
                stats.sat += 1
            else:
                stats.unknown += 1
            independent.append(index)
    stats.absorb(solver)
    return independent


class _Integrated:
    """State for one integrated run; the solver is driven level by level.

    Decision level ``k`` (1-based) always holds the assumption at position
    ``k - 1``; any edit at position ``p`` first backtracks to level ``p``.
    """

    def __init__(self, inst: PadoaInstance, independent: list[int], unknown: list[int],
                 budget: int | None, stats: ImplicitStats, deadline: float | None):
        self.inst = inst
        self.solver = Solver.from_formula(inst.psi)
        self.independent = independent
        self.unknown = unknown
        self.budget = budget
        self.stats = stats
        self.deadline = deadline
        # internal literals, parallel to the projection order of the trail levels
        self.assumps = [_to_int(inst.z(j)) for j in independent + unknown]
        self.index: int | None = None
        self.query_start = 0

    def _cut(self, pos: int) -> None:
        if self.solver.decision_level() > pos:
            self.solver.backtrack_until(pos)

    def _next_query(self) -> bool:
        """Pop the next unknown variable into the tail. False when none is left."""
        if not self.unknown:
            return False
        self.index = self.unknown.pop()
        pos = len(self.assumps) - 1
        self._cut(pos)
        self.assumps.pop()
        self.assumps += [_to_int(self.index), _to_int(-self.inst.y(self.index))]
        self.stats.queries += 1
        self.query_start = self.solver.stats.conflicts
        return True

    def _mark_dependent(self) -> bool:
        self.stats.unsat += 1
        pos = len(self.assumps) - 2
        self._cut(pos)
        del self.assumps[pos:]
        return self._next_query()

    def _mark_independent(self, sat: bool) -> bool:
        if sat:
            self.stats.sat += 1
        else:
            self.stats.unknown += 1
        index = self.index
        del self.assumps[-2:]
        self.independent.append(index)
        splice = len(self.independent) - 1
        self.assumps.insert(splice, _to_int(self.inst.z(index)))
        self._cut(splice)
        return self._next_query()

    def run(self) -> list[int] | None:
        """Returns the support, or ``None`` when the formula turns out UNSAT."""
        solver = self.solver
        if not solver.ok or not solver.resolve_conflicts():
            return None
        if not self._next_query():
            return self.independent
        val = solver._val
        ticks = 0
        while True:
            ticks += 1
            if self.deadline is not None and ticks & 255 == 0 and time.monotonic() > self.deadline:
                raise SolverTimeout()
            branch = None
            assumps = self.assumps
            restart_walk = False
            while solver.decision_level() < len(assumps):
                pos = solver.decision_level()
                il = assumps[pos]
                v = val[il]
                if v == -1:
                    if pos < len(assumps) - 2:
                        # a selector is refuted only if the formula itself is UNSAT
                        return None
                    if not self._mark_dependent():
                        return self.independent
                    assumps = self.assumps
                    continue
                if v == 1:
                    solver.new_decision_level(assumption=True)
                    continue
                branch = il
                break
            if branch is None:
                over = (self.budget is not None
                        and solver.stats.conflicts - self.query_start >= self.budget)
                lit = None if over else solver.pick_branch_literal()
                if lit is None:
                    if not self._mark_independent(sat=not over):
                        return self.independent
                    restart_walk = True
                else:
                    branch = _to_int(lit)
                    solver.new_decision_level()
                    solver.stats.decisions += 1
            else:
                solver.new_decision_level(assumption=True)
            if restart_walk:
                continue
            solver._enqueue(branch, -1)
            if not solver.resolve_conflicts():
                return None
            if solver.should_restart():
                self._cut(len(self.assumps))


def integrated_implicit(f: CnfFormula, projection: Iterable[int] | None = None,
                        budget: int | None = DEFAULT_CONFLICT_BUDGET,
                        stats: ImplicitStats | None = None,
                        deadline: float | None = None) -> list[int]:
    """Single persistent solver run classifying every projection variable.

    Returns ``[]`` if the formula is found UNSAT along the way.
    """
    P = set(f.projection if projection is None else projection)
    stats = stats if stats is not None else ImplicitStats()
    inc = compute_incidence(f)
    independent, rest = _split_unconstrained(f, P, inc)
    stats.unconstrained = len(independent)
    if not rest:
        return independent
    inst = build_padoa(f, P)
    run = _Integrated(inst, list(independent), query_order(rest, inc), budget, stats, deadline)
    try:
        result = run.run()
    except SolverTimeout:
        stats.absorb(run.solver)
        raise SearchTimeout(list(run.independent), stats) from None
    stats.absorb(run.solver)
    return [] if result is None else result
