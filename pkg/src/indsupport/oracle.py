"""Exhaustive-enumeration ground truth for small formulas.

Assignments are encoded as integers: bit ``v - 1`` holds variable ``v``.
"""

from __future__ import annotations

from collections.abc import Iterable

import numpy as np

from .cnf import CnfFormula

MAX_VARS = 26
_CHUNK = 1 << 20


class OracleLimitError(ValueError):
    pass


def _check_bound(f: CnfFormula) -> None:
    if f.num_vars > MAX_VARS:
        raise OracleLimitError(f"{f.num_vars} variables exceeds enumeration bound {MAX_VARS}")


def _mask(variables: Iterable[int]) -> int:
    m = 0
    for v in variables:
        m |= 1 << (v - 1)
    return m


def _models_chunk(f: CnfFormula, lo: int, hi: int) -> np.ndarray:
    a = np.arange(lo, hi, dtype=np.int64)
    keep = np.ones(a.shape, dtype=bool)
    for c in f.clauses:
        pos = _mask(l for l in c if l > 0)
        neg = _mask(-l for l in c if l < 0)
        # satisfied iff some positive var is 1 or some negated var is 0
        sat = ((a & pos) != 0) | ((~a & neg) != 0)
        keep &= sat
        if not keep.any():
            break
    return a[keep]


def model_codes(f: CnfFormula) -> np.ndarray:
    """Sorted integer codes of every satisfying assignment."""
    _check_bound(f)
    total = 1 << f.num_vars
    parts = [_models_chunk(f, lo, min(lo + _CHUNK, total)) for lo in range(0, total, _CHUNK)]
    return np.concatenate(parts) if parts else np.zeros(0, dtype=np.int64)


def enumerate_solutions(f: CnfFormula) -> list[dict[int, bool]]:
    return [{v: bool(code >> (v - 1) & 1) for v in f.variables} for code in model_codes(f).tolist()]


def is_satisfiable(f: CnfFormula, assumptions: Iterable[int] = ()) -> bool:
    codes = model_codes(f)
    for lit in assumptions:
        bit = np.int64(1) << (abs(lit) - 1)
        codes = codes[(codes & bit) != 0] if lit > 0 else codes[(codes & bit) == 0]
    return codes.size > 0


def projected_count(f: CnfFormula, variables: Iterable[int], codes: np.ndarray | None = None) -> int:
    codes = model_codes(f) if codes is None else codes
    return int(np.unique(codes & _mask(variables)).size)


def is_independent_support(f: CnfFormula, projection: Iterable[int], support: Iterable[int]) -> bool:
    P, I = set(projection), set(support)
    if not I <= P:
        raise ValueError(f"support variables {sorted(I - P)} are not in the projection set")
    codes = model_codes(f)
    keys = codes & _mask(I)
    pairs = np.unique(np.stack([keys, codes & _mask(P)], axis=1), axis=0) if codes.size else codes
    return int(np.unique(keys).size) == len(pairs)


def is_defined(f: CnfFormula, x: int, support: Iterable[int]) -> bool:
    """Every assignment to ``support`` fixes ``x`` in all consistent models."""
    I = set(support)
    if len(I) > 20:
        raise OracleLimitError("definability check limited to 20 support variables")
    codes = model_codes(f)
    if codes.size == 0:
        return True
    keys = codes & _mask(I)
    xs = (codes >> (x - 1)) & 1
    pairs = np.unique(np.stack([keys, xs], axis=1), axis=0)
    return int(np.unique(keys).size) == len(pairs)


def check_projected_count_preserved(f: CnfFormula, projection: Iterable[int],
                                    support: Iterable[int]) -> bool:
    codes = model_codes(f)
    return projected_count(f, support, codes) == projected_count(f, projection, codes)


def is_minimal_support(f: CnfFormula, projection: Iterable[int], support: Iterable[int]) -> bool:
    """A support none of whose single-element removals is still a support."""
    I = set(support)
    if not is_independent_support(f, projection, I):
        return False
    return all(not is_independent_support(f, projection, I - {v}) for v in I)


def entails_clause(f: CnfFormula, clause: Iterable[int]) -> bool:
    """True iff every model of ``f`` satisfies ``clause``."""
    return not is_satisfiable(f, [-l for l in clause])
