"""Benchmark harness: run the pipeline over instance files and score with PAR-2."""

from __future__ import annotations

import csv
import io
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, replace
from pathlib import Path

from .cnf import DimacsError, read_dimacs
from .pipeline import PipelineConfig, PipelineTimeout, run_pipeline

DONE, TIMEOUT, ERROR = "done", "timeout", "error"
CSV_COLUMNS = ("path", "outcome", "seconds", "supportSize")


@dataclass(frozen=True)
class BenchRecord:
    path: str
    outcome: str
    seconds: float
    support_size: int | None = None

    def __post_init__(self):
        if self.outcome != DONE and self.support_size is not None:
            raise ValueError("only finished runs carry a support size")


def par2_score(records, timeout: float) -> float:
    """Mean of run time for finished instances and ``2 * timeout`` otherwise."""
    records = list(records)
    if not records:
        return 0.0
    scores = [r.seconds if r.outcome == DONE else 2 * timeout for r in records]
    return sum(scores) / len(scores)


def run_instance(path, cfg: PipelineConfig, timeout: float) -> BenchRecord:
    t0 = time.monotonic()
    try:
        f = read_dimacs(path)
        result = run_pipeline(f, replace(cfg, wall_timeout=timeout))
    except PipelineTimeout:
        return BenchRecord(str(path), TIMEOUT, time.monotonic() - t0)
    except (OSError, DimacsError, UnicodeDecodeError):
        return BenchRecord(str(path), ERROR, time.monotonic() - t0)
    elapsed = time.monotonic() - t0
    if elapsed > timeout:
        return BenchRecord(str(path), TIMEOUT, elapsed)
    return BenchRecord(str(path), DONE, elapsed, len(result.support))


def bench(instances, cfg: PipelineConfig | None = None, timeout: float = 60.0,
          jobs: int = 1) -> tuple[list[BenchRecord], float]:
    cfg = cfg or PipelineConfig()
    paths = [Path(p) for p in instances]
    if jobs > 1:
        with ProcessPoolExecutor(jobs) as pool:
            records = list(pool.map(run_instance, paths, [cfg] * len(paths),
                                    [timeout] * len(paths)))
    else:
        records = [run_instance(p, cfg, timeout) for p in paths]
    return records, par2_score(records, timeout)


def records_to_csv(records) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_COLUMNS)
    for r in records:
        w.writerow([r.path, r.outcome, f"{r.seconds:.3f}",
                    "" if r.support_size is None else r.support_size])
    return buf.getvalue()
