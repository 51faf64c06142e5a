"""Two-phase independent support extraction: gate-based elimination, then Padoa queries."""

from __future__ import annotations

import time
from dataclasses import dataclass, field

from .cdcl import Solver, SolverTimeout, Status
from .cnf import CnfFormula, build_occurrence_list, compute_incidence
from .explicit import greedy_ind_search
from .gates import recover_gates
from .implicit import (DEFAULT_CONFLICT_BUDGET, ImplicitStats, SearchTimeout,
                       integrated_implicit, simple_search)


@dataclass
class PipelineConfig:
    conflict_budget_per_var: int | None = DEFAULT_CONFLICT_BUDGET
    run_explicit: bool = True
    run_implicit: bool = True
    use_simple_search: bool = False
    xor_max_len: int = 5
    verify: bool = False
    seed: int = 0
    wall_timeout: float | None = None

    def __post_init__(self):
        if not 2 <= self.xor_max_len <= 5:
            raise ValueError("xor_max_len must be in 2..5")
        if self.conflict_budget_per_var is not None and self.conflict_budget_per_var < 0:
            raise ValueError("conflict budget must be >= 0")


@dataclass
class SupportResult:
    support: set[int]
    projection_size: int = 0
    stats: dict = field(default_factory=dict)
    timed_out: bool = False
    verified: bool | None = None

    def stat_lines(self, timings: bool = False) -> list[str]:
        # timings are excluded by default so repeated runs print identical output
        return [f"c {k}: {v}" for k, v in self.stats.items()
                if timings or "seconds" not in k]


class PipelineTimeout(Exception):
    def __init__(self, result: SupportResult):
        super().__init__("wall timeout")
        self.result = result


def run_pipeline(f: CnfFormula, cfg: PipelineConfig | None = None) -> SupportResult:
    """Extract an independent support of ``f.projection``.

    The explicit phase's output becomes the projection set of the implicit
    phase. Raises :class:`PipelineTimeout` (carrying partial stats) when the
    wall timeout expires.
    """
    cfg = cfg or PipelineConfig()
    t0 = time.monotonic()
    deadline = None if cfg.wall_timeout is None else t0 + cfg.wall_timeout
    P = set(f.projection)
    stats: dict = {"projection size": len(P)}
    result = SupportResult(set(P), len(P), stats)

    def timeout() -> PipelineTimeout:
        stats["seconds"] = round(time.monotonic() - t0, 3)
        result.timed_out = True
        return PipelineTimeout(result)

    # a budgeted satisfiability probe; UNKNOWN is treated as satisfiable
    probe = Solver.from_formula(f, seed=cfg.seed)
    try:
        status = probe.solve([], cfg.conflict_budget_per_var, deadline).status
    except SolverTimeout:
        raise timeout() from None
    stats["satisfiable"] = status.value
    if status is Status.UNSAT:
        result.support = set()
        stats["seconds"] = round(time.monotonic() - t0, 3)
        return result

    current = set(P)
    if cfg.run_explicit:
        t = time.monotonic()
        gates = recover_gates(f, cfg.xor_max_len, build_occurrence_list(f))
        ex = greedy_ind_search(gates, current, compute_incidence(f))
        current = ex.support
        result.support = set(current)
        stats["gates"] = len(gates)
        stats["explicit removed"] = len(ex.removed)
        stats["explicit support"] = len(current)
        stats["explicit seconds"] = round(time.monotonic() - t, 3)
        if deadline is not None and time.monotonic() > deadline:
            raise timeout()

    if cfg.run_implicit:
        t = time.monotonic()
        istats = ImplicitStats()
        search = simple_search if cfg.use_simple_search else integrated_implicit
        try:
            current = set(search(f, current, cfg.conflict_budget_per_var, istats, deadline))
        except SearchTimeout as exc:
            stats["implicit queries"] = exc.stats.queries
            raise timeout() from None
        result.support = set(current)
        stats["implicit variant"] = "simple" if cfg.use_simple_search else "integrated"
        stats["implicit queries"] = istats.queries
        stats["implicit unsat"] = istats.unsat
        stats["implicit sat"] = istats.sat
        stats["implicit unknown"] = istats.unknown
        stats["assumption insertions"] = istats.assumption_insertions
        stats["propagations"] = istats.propagations
        stats["conflicts"] = istats.conflicts
        stats["implicit seconds"] = round(time.monotonic() - t, 3)

    stats["support size"] = len(current)
    if cfg.verify:
        from .oracle import OracleLimitError, is_independent_support

        try:
            result.verified = is_independent_support(f, P, current)
            stats["verified"] = "pass" if result.verified else "FAIL"
        except OracleLimitError:
            stats["verified"] = "skipped (too many variables)"
    stats["seconds"] = round(time.monotonic() - t0, 3)
    return result
