"""A small MiniSat-style CDCL solver with assumptions and a conflict budget.

Literals on the public API are DIMACS integers. Internally a literal is
``2 * var + sign`` with ``sign == 1`` for negation, so ``lit ^ 1`` negates.
The search hooks (``propagate``, ``analyze_conflict``, ``backtrack_until``,
``pick_branch_literal``, ...) are public because the integrated definability
search drives them directly.
"""

from __future__ import annotations

import enum
import heapq
import random
import time
from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field

VAR_DECAY = 0.95
RESTART_UNIT = 100
RESCALE_LIMIT = 1e100


class Status(enum.Enum):
    SAT = "SAT"
    UNSAT = "UNSAT"
    UNKNOWN = "UNKNOWN"


@dataclass
class SolveOutcome:
    status: Status
    model: dict[int, bool] | None = None


@dataclass
class SolverStats:
    conflicts: int = 0
    decisions: int = 0
    propagations: int = 0
    propagate_calls: int = 0
    assumption_insertions: int = 0
    restarts: int = 0
    learnt: int = 0

    def line(self) -> str:
        return (f"conflicts: {self.conflicts} propagations: {self.propagations} "
                f"decisions: {self.decisions} assumption insertions: {self.assumption_insertions}")


class SolverTimeout(Exception):
    pass


def luby(i: int) -> int:
    """i-th element (0-based) of the Luby sequence 1 1 2 1 1 2 4 ..."""
    size, seq = 1, 0
    while size < i + 1:
        seq += 1
        size = 2 * size + 1
    while size - 1 != i:
        size = (size - 1) >> 1
        seq -= 1
        i = i % size
    return 1 << seq


def _to_int(lit: int) -> int:
    return 2 * lit if lit > 0 else 2 * -lit + 1


def _to_dimacs(ilit: int) -> int:
    return -(ilit >> 1) if ilit & 1 else ilit >> 1


@dataclass
class _Search:
    restart_index: int = 0
    conflicts_since_restart: int = 0
    level_is_assump: list[bool] = field(default_factory=list)


class Solver:
    def __init__(self, num_vars: int = 0, seed: int = 0, random_var_freq: float = 0.0):
        self.num_vars = 0
        self.ok = True
        self.stats = SolverStats()
        self._clauses: list[list[int]] = []
        self._learnt_flags: list[bool] = []
        self._watches: list[list[int]] = [[], []]
        self._val: list[int] = [0, 0]
        self._level: list[int] = [0]
        self._reason: list[int] = [-1]
        self._activity: list[float] = [0.0]
        self._polarity: list[bool] = [False]
        self._heap: list[tuple[float, int]] = []
        self._var_inc = 1.0
        self._trail: list[int] = []
        self._trail_lim: list[int] = []
        self._qhead = 0
        self._search = _Search()
        self._rng = random.Random(seed)
        self.random_var_freq = random_var_freq
        self.model: dict[int, bool] | None = None
        self._last_conflict: int | None = None
        self.new_vars(num_vars)

    # ---------------------------------------------------------------- setup

    def new_vars(self, n: int) -> None:
        for _ in range(n):
            self.num_vars += 1
            v = self.num_vars
            self._watches += [[], []]
            self._val += [0, 0]
            self._level.append(0)
            self._reason.append(-1)
            self._activity.append(0.0)
            self._polarity.append(False)
            heapq.heappush(self._heap, (-0.0, v))

    def add_clause(self, lits: Iterable[int]) -> bool:
        """Add a clause at decision level 0. Returns ``False`` once the solver is UNSAT."""
        if self.decision_level() != 0:
            raise RuntimeError("clauses can only be added at decision level 0")
        ilits: list[int] = []
        seen: set[int] = set()
        for lit in lits:
            if lit == 0 or abs(lit) > self.num_vars:
                raise ValueError(f"literal {lit} outside 1..{self.num_vars}")
            il = _to_int(lit)
            if il ^ 1 in seen:
                return self.ok
            if il not in seen:
                seen.add(il)
                ilits.append(il)
        if not self.ok:
            return False
        val = self._val
        if any(val[l] == 1 for l in ilits):
            return True
        ilits = [l for l in ilits if val[l] == 0]
        if not ilits:
            self.ok = False
        elif len(ilits) == 1:
            self._enqueue(ilits[0], -1)
            if self._propagate() is not None:
                self.ok = False
        else:
            self._attach(ilits, learnt=False)
        return self.ok

    def add_clauses(self, clauses: Iterable[Iterable[int]]) -> bool:
        for c in clauses:
            self.add_clause(c)
        return self.ok

    @classmethod
    def from_formula(cls, f, **kw) -> Solver:
        s = cls(f.num_vars, **kw)
        s.add_clauses(f.clauses)
        return s

    def _attach(self, ilits: list[int], learnt: bool) -> int:
        ci = len(self._clauses)
        self._clauses.append(ilits)
        self._learnt_flags.append(learnt)
        self._watches[ilits[0]].append(ci)
        self._watches[ilits[1]].append(ci)
        return ci

    # ------------------------------------------------------- trail handling

    def decision_level(self) -> int:
        return len(self._trail_lim)

    def value(self, lit: int) -> bool | None:
        v = self._val[_to_int(lit)]
        return None if v == 0 else v == 1

    def level_of(self, var: int) -> int:
        return self._level[var] if self._val[2 * var] else -1

    def trail(self) -> list[int]:
        return [_to_dimacs(l) for l in self._trail]

    def new_decision_level(self, assumption: bool = False) -> None:
        self._trail_lim.append(len(self._trail))
        self._search.level_is_assump.append(assumption)
        if assumption:
            self.stats.assumption_insertions += 1

    def _enqueue(self, il: int, reason: int) -> None:
        v = il >> 1
        self._val[il] = 1
        self._val[il ^ 1] = -1
        self._level[v] = len(self._trail_lim)
        self._reason[v] = reason
        self._trail.append(il)

    def enqueue(self, lit: int) -> None:
        il = _to_int(lit)
        if self._val[il] != 0:
            raise ValueError(f"literal {lit} already assigned")
        self._enqueue(il, -1)

    def backtrack_until(self, level: int) -> None:
        if level < 0:
            raise ValueError("negative level")
        if self.decision_level() <= level:
            return
        lim = self._trail_lim[level]
        val, reason, polarity = self._val, self._reason, self._polarity
        act, heap = self._activity, self._heap
        level_of = self._level
        assump_levels = self._search.level_is_assump
        for il in reversed(self._trail[lim:]):
            v = il >> 1
            # assumption literals do not feed the polarity cache
            if not (reason[v] == -1 and assump_levels[level_of[v] - 1]):
                polarity[v] = not (il & 1)
            val[il] = 0
            val[il ^ 1] = 0
            reason[v] = -1
            heapq.heappush(heap, (-act[v], v))
        del self._trail[lim:]
        del self._trail_lim[level:]
        del assump_levels[level:]
        self._qhead = min(self._qhead, lim)

    # ---------------------------------------------------------- propagation

    def _propagate(self) -> int | None:
        """Unit propagation to fixpoint; index of a conflicting clause or None."""
        clauses, watches, val = self._clauses, self._watches, self._val
        trail = self._trail
        stats = self.stats
        stats.propagate_calls += 1
        qhead = self._qhead
        conflict = None
        while qhead < len(trail):
            false_lit = trail[qhead] ^ 1
            qhead += 1
            stats.propagations += 1
            ws = watches[false_lit]
            keep: list[int] = []
            i, n = 0, len(ws)
            while i < n:
                ci = ws[i]
                i += 1
                c = clauses[ci]
                if c[0] == false_lit:
                    c[0], c[1] = c[1], false_lit
                first = c[0]
                if val[first] == 1:
                    keep.append(ci)
                    continue
                for k in range(2, len(c)):
                    lk = c[k]
                    if val[lk] != -1:
                        c[1], c[k] = lk, false_lit
                        watches[lk].append(ci)
                        break
                else:
                    keep.append(ci)
                    if val[first] == -1:
                        keep.extend(ws[i:])
                        conflict = ci
                        qhead = len(trail)
                        break
                    self._enqueue(first, ci)
            watches[false_lit] = keep
            if conflict is not None:
                break
        self._qhead = qhead
        return conflict

    def propagate(self) -> list[int] | None:
        """Propagate pending literals; the falsified clause (DIMACS) on conflict."""
        ci = self._propagate()
        self._last_conflict = ci
        return None if ci is None else [_to_dimacs(l) for l in self._clauses[ci]]

    # ------------------------------------------------------------- analysis

    def _bump(self, v: int) -> None:
        act = self._activity
        act[v] += self._var_inc
        if act[v] > RESCALE_LIMIT:
            for u in range(1, self.num_vars + 1):
                act[u] *= 1e-100
            self._var_inc *= 1e-100
            self._rebuild_heap()
        elif self._val[2 * v] == 0:
            heapq.heappush(self._heap, (-act[v], v))

    def _rebuild_heap(self) -> None:
        act, val = self._activity, self._val
        self._heap = [(-act[v], v) for v in range(1, self.num_vars + 1) if val[2 * v] == 0]
        heapq.heapify(self._heap)

    def _analyze(self, confl: int) -> tuple[list[int], int]:
        """First-UIP learning. Returns (internal learnt clause, backjump level)."""
        level, reason, trail = self._level, self._reason, self._trail
        dl = self.decision_level()
        seen: set[int] = set()
        learnt = [0]
        path = 0
        p = -1
        idx = len(trail) - 1
        clause = self._clauses[confl]
        while True:
            for q in clause:
                v = q >> 1
                if p != -1 and v == p >> 1:
                    continue
                if v not in seen and level[v] > 0:
                    seen.add(v)
                    self._bump(v)
                    if level[v] >= dl:
                        path += 1
                    else:
                        learnt.append(q)
            while (trail[idx] >> 1) not in seen:
                idx -= 1
            p = trail[idx]
            idx -= 1
            seen.discard(p >> 1)
            path -= 1
            if path <= 0:
                break
            clause = self._clauses[reason[p >> 1]]
        learnt[0] = p ^ 1
        if len(learnt) == 1:
            bj = 0
        else:
            mi = max(range(1, len(learnt)), key=lambda i: level[learnt[i] >> 1])
            learnt[1], learnt[mi] = learnt[mi], learnt[1]
            bj = level[learnt[1] >> 1]
        self._var_inc /= VAR_DECAY
        return learnt, bj

    def analyze_conflict(self, conflict: Sequence[int] | None = None) -> tuple[list[int], int]:
        """First-UIP clause (DIMACS, asserting literal first) and its backjump level.

        ``conflict`` defaults to the clause returned by the last ``propagate``.
        """
        if self.decision_level() == 0:
            raise ValueError("conflict analysis needs decision level >= 1")
        if conflict is None:
            ci = self._last_conflict
        else:
            ci = self._find_clause(conflict)
        learnt, bj = self._analyze(ci)
        return [_to_dimacs(l) for l in learnt], bj

    def _find_clause(self, lits: Sequence[int]) -> int:
        target = sorted(_to_int(l) for l in lits)
        for ci, c in enumerate(self._clauses):
            if sorted(c) == target:
                return ci
        raise ValueError("conflict clause not in the database")

    def learn(self, learnt: Sequence[int], backjump: int) -> None:
        """Backjump, record the learnt clause and assert its first literal."""
        ilits = [_to_int(l) for l in learnt]
        self.backtrack_until(backjump)
        if len(ilits) == 1:
            self._enqueue(ilits[0], -1)
        else:
            ci = self._attach(ilits, learnt=True)
            self.stats.learnt += 1
            self._enqueue(ilits[0], ci)

    def _learn_internal(self, ilits: list[int], backjump: int) -> None:
        self.backtrack_until(backjump)
        if len(ilits) == 1:
            self._enqueue(ilits[0], -1)
        else:
            ci = self._attach(ilits, learnt=True)
            self.stats.learnt += 1
            self._enqueue(ilits[0], ci)

    def resolve_conflicts(self) -> bool:
        """Propagate, learning from conflicts until fixpoint.

        Returns ``False`` when a conflict occurs at level 0 (the clause set is
        UNSAT); the solver is then permanently UNSAT.
        """
        while True:
            ci = self._propagate()
            if ci is None:
                return True
            self.stats.conflicts += 1
            self._search.conflicts_since_restart += 1
            if self.decision_level() == 0:
                self.ok = False
                return False
            learnt, bj = self._analyze(ci)
            self._learn_internal(learnt, bj)

    # ------------------------------------------------------------ branching

    def pick_branch_literal(self) -> int | None:
        val, heap = self._val, self._heap
        if self.random_var_freq and self._rng.random() < self.random_var_freq:
            free = [v for v in range(1, self.num_vars + 1) if val[2 * v] == 0]
            if free:
                v = self._rng.choice(free)
                return v if self._polarity[v] else -v
        act = self._activity
        while heap:
            neg_act, v = heap[0]
            if val[2 * v] != 0 or -neg_act != act[v]:
                heapq.heappop(heap)
                continue
            heapq.heappop(heap)
            return v if self._polarity[v] else -v
        # heap entries can go stale; fall back to a scan
        for v in range(1, self.num_vars + 1):
            if val[2 * v] == 0:
                return v if self._polarity[v] else -v
        return None

    def should_restart(self) -> bool:
        s = self._search
        if s.conflicts_since_restart >= luby(s.restart_index) * RESTART_UNIT:
            s.restart_index += 1
            s.conflicts_since_restart = 0
            self.stats.restarts += 1
            return True
        return False

    def current_model(self) -> dict[int, bool]:
        return {v: self._val[2 * v] == 1 for v in range(1, self.num_vars + 1)}

    # ---------------------------------------------------------------- solve

    def solve(self, assumps: Sequence[int] = (), conflict_limit: int | None = None,
              deadline: float | None = None) -> SolveOutcome:
        """Solve under assumptions, each placed on its own decision level.

        ``conflict_limit`` counts conflicts since this call began; ``None`` is
        unlimited. Always returns at decision level 0.
        """
        self.model = None
        if not self.ok:
            return SolveOutcome(Status.UNSAT)
        self.backtrack_until(0)
        if not self.resolve_conflicts():
            return SolveOutcome(Status.UNSAT)
        ia = [_to_int(l) for l in assumps]
        for l in assumps:
            if l == 0 or abs(l) > self.num_vars:
                raise ValueError(f"assumption {l} outside 1..{self.num_vars}")
        start = self.stats.conflicts
        val = self._val
        while True:
            branch = None
            while self.decision_level() < len(ia):
                il = ia[self.decision_level()]
                if val[il] == -1:
                    self.backtrack_until(0)
                    return SolveOutcome(Status.UNSAT)
                if val[il] == 1:
                    self.new_decision_level(assumption=True)
                    continue
                branch = il
                break
            if branch is None:
                lit = self.pick_branch_literal()
                if lit is None:
                    self.model = self.current_model()
                    self.backtrack_until(0)
                    return SolveOutcome(Status.SAT, self.model)
                branch = _to_int(lit)
                self.new_decision_level()
                self.stats.decisions += 1
            else:
                self.new_decision_level(assumption=True)
            self._enqueue(branch, -1)
            if not self.resolve_conflicts():
                self.backtrack_until(0)
                return SolveOutcome(Status.UNSAT)
            if self.should_restart():
                self.backtrack_until(0)
            if conflict_limit is not None and self.stats.conflicts - start >= conflict_limit:
                self.backtrack_until(0)
                return SolveOutcome(Status.UNKNOWN)
            if deadline is not None and time.monotonic() > deadline:
                self.backtrack_until(0)
                raise SolverTimeout()

    # --------------------------------------------------------- diagnostics

    def learnt_clauses(self) -> list[list[int]]:
        return [[_to_dimacs(l) for l in c]
                for c, lf in zip(self._clauses, self._learnt_flags) if lf]

    def check_trail(self) -> bool:
        """Consistency: each implied literal's reason is falsified apart from it."""
        seen = set()
        for il in self._trail:
            v = il >> 1
            if v in seen:
                return False
            seen.add(v)
            r = self._reason[v]
            if r != -1:
                c = self._clauses[r]
                if c[0] != il or any(self._val[l] != -1 for l in c[1:]):
                    return False
        return True
