"""CNF formulas with projection sets: DIMACS I/O, occurrence lists, incidence."""

from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass, field
from typing import TextIO


class DimacsError(ValueError):
    """Malformed DIMACS input. ``line`` is 1-based."""

    def __init__(self, message: str, line: int):
        super().__init__(f"line {line}: {message}")
        self.line = line


def normalize_clause(lits: Iterable[int]) -> tuple[int, ...] | None:
    """Drop duplicate literals; return ``None`` for a tautology.

    Literal order of first occurrence is kept.
    """
    out: list[int] = []
    seen: set[int] = set()
    for lit in lits:
        if -lit in seen:
            return None
        if lit not in seen:
            seen.add(lit)
            out.append(lit)
    return tuple(out)


@dataclass(frozen=True)
class CnfFormula:
    num_vars: int
    clauses: tuple[tuple[int, ...], ...]
    projection: frozenset[int] = field(default=None)  # type: ignore[assignment]

    def __post_init__(self):
        clauses = tuple(tuple(c) for c in self.clauses)
        object.__setattr__(self, "clauses", clauses)
        for c in clauses:
            for lit in c:
                if lit == 0 or abs(lit) > self.num_vars:
                    raise ValueError(f"literal {lit} out of range 1..{self.num_vars}")
        if self.projection is None:
            proj = frozenset(range(1, self.num_vars + 1))
        else:
            proj = frozenset(self.projection)
            bad = [v for v in proj if not 1 <= v <= self.num_vars]
            if bad:
                raise ValueError(f"projection variables out of range: {sorted(bad)}")
        object.__setattr__(self, "projection", proj)

    @classmethod
    def from_clauses(cls, clauses: Iterable[Iterable[int]], num_vars: int | None = None,
                     projection: Iterable[int] | None = None) -> CnfFormula:
        """Build a normalized formula; ``num_vars`` defaults to the largest variable used."""
        norm = []
        for c in clauses:
            nc = normalize_clause(c)
            if nc is not None:
                norm.append(nc)
        if num_vars is None:
            num_vars = max((abs(l) for c in norm for l in c), default=0)
            if projection is not None:
                num_vars = max([num_vars, *projection])
        return cls(num_vars, tuple(norm),
                   None if projection is None else frozenset(projection))

    def with_projection(self, projection: Iterable[int]) -> CnfFormula:
        return CnfFormula(self.num_vars, self.clauses, frozenset(projection))

    @property
    def variables(self) -> range:
        return range(1, self.num_vars + 1)

    def __len__(self) -> int:
        return len(self.clauses)


def parse_dimacs(source: str | TextIO) -> CnfFormula:
    """Parse DIMACS CNF text (or a readable stream).

    ``c ind ... 0`` lines declare the projection set; several are unioned.
    Without any, every variable is projected.
    """
    text = source if isinstance(source, str) else source.read()
    num_vars: int | None = None
    clauses: list[tuple[int, ...]] = []
    projection: set[int] | None = None
    current: list[int] = []
    current_start = 0

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("c"):
            parts = line.split()
            if len(parts) >= 2 and parts[0] == "c" and parts[1] == "ind":
                try:
                    nums = [int(t) for t in parts[2:]]
                except ValueError:
                    raise DimacsError("non-integer token in 'c ind' line", lineno) from None
                if not nums or nums[-1] != 0:
                    raise DimacsError("'c ind' line must end with 0", lineno)
                if num_vars is not None:
                    for v in nums[:-1]:
                        if not 1 <= v <= num_vars:
                            raise DimacsError(f"projection variable {v} out of range", lineno)
                if projection is None:
                    projection = set()
                projection.update(nums[:-1])
            continue
        if line.startswith("p"):
            parts = line.split()
            if num_vars is not None:
                raise DimacsError("duplicate header", lineno)
            if len(parts) != 4 or parts[1] != "cnf":
                raise DimacsError(f"malformed header {line!r}", lineno)
            try:
                num_vars, _ = int(parts[2]), int(parts[3])
            except ValueError:
                raise DimacsError(f"malformed header {line!r}", lineno) from None
            if num_vars < 0:
                raise DimacsError("negative variable count", lineno)
            continue
        if num_vars is None:
            raise DimacsError("clause before 'p cnf' header", lineno)
        for tok in line.split():
            try:
                lit = int(tok)
            except ValueError:
                raise DimacsError(f"invalid literal {tok!r}", lineno) from None
            if lit == 0:
                nc = normalize_clause(current)
                if nc is not None:
                    clauses.append(nc)
                current = []
                continue
            if abs(lit) > num_vars:
                raise DimacsError(f"literal {lit} exceeds declared {num_vars} variables", lineno)
            if not current:
                current_start = lineno
            current.append(lit)

    if num_vars is None:
        raise DimacsError("missing 'p cnf' header", 1)
    if current:
        raise DimacsError("unterminated clause", current_start)
    if projection is not None:
        bad = sorted(v for v in projection if not 1 <= v <= num_vars)
        if bad:
            raise DimacsError(f"projection variable {bad[0]} out of range", 1)
    return CnfFormula(num_vars, tuple(clauses),
                      None if projection is None else frozenset(projection))


def read_dimacs(path) -> CnfFormula:
    with open(path) as fh:
        return parse_dimacs(fh)


def to_dimacs(f: CnfFormula, with_projection: bool = True, comments: Iterable[str] = ()) -> str:
    lines = [f"c {c}" for c in comments]
    lines.append(f"p cnf {f.num_vars} {len(f.clauses)}")
    if with_projection:
        lines.append(format_ind_line(f.projection))
    lines.extend(" ".join(map(str, c)) + " 0" for c in f.clauses)
    return "\n".join(lines) + "\n"


def format_ind_line(variables: Iterable[int]) -> str:
    vs = sorted(variables)
    return "c ind " + "".join(f"{v} " for v in vs) + "0"


def write_support(result) -> str:
    """Render a support (a ``SupportResult`` or a plain collection of variables)."""
    support = getattr(result, "support", result)
    support = sorted(support)
    return f"{format_ind_line(support)}\nc set size: {len(support)}"


def build_occurrence_list(f: CnfFormula) -> dict[int, list[int]]:
    """Map every literal of ``f`` to the positions of the clauses containing it."""
    occ: dict[int, list[int]] = {}
    for v in f.variables:
        occ[v] = []
        occ[-v] = []
    for i, c in enumerate(f.clauses):
        for lit in c:
            occ[lit].append(i)
    return occ


def compute_incidence(f: CnfFormula) -> dict[int, int]:
    """Number of clauses mentioning each variable, in either polarity."""
    inc = dict.fromkeys(f.variables, 0)
    for c in f.clauses:
        for lit in c:
            inc[abs(lit)] += 1
    return inc
