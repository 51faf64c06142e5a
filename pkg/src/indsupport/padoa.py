"""Padoa duplication: two copies of the formula joined by selector-guarded equalities."""

from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass

from .cnf import CnfFormula, to_dimacs


@dataclass(frozen=True)
class PadoaInstance:
    psi: CnfFormula
    y_of: dict[int, int]
    z_of: dict[int, int]
    num_original: int

    def y(self, x: int) -> int:
        return self.y_of[x]

    def z(self, x: int) -> int:
        return self.z_of[x]

    def to_dimacs(self) -> str:
        n = self.num_original
        comments = [f"padoa: x = 1..{n}, y_i = {n} + i, z selectors follow"]
        comments += [f"map x {x} y {self.y_of[x]} z {self.z_of[x]}" for x in sorted(self.z_of)]
        return to_dimacs(self.psi, with_projection=False, comments=comments)


def build_padoa(f: CnfFormula, projection: Iterable[int] | None = None) -> PadoaInstance:
    """Build ``f(X) & f(Y) & AND_{i in P} (z_i -> x_i == y_i)``.

    Numbering: ``y_i = n + i`` for every variable, ``z`` for the j-th smallest
    projection variable is ``2n + j``.
    """
    n = f.num_vars
    P = sorted(f.projection if projection is None else set(projection))
    y_of = {x: n + x for x in f.variables}
    z_of = {x: 2 * n + rank for rank, x in enumerate(P, start=1)}

    def shift(lit: int) -> int:
        return lit + n if lit > 0 else lit - n

    clauses = list(f.clauses)
    clauses += [tuple(shift(l) for l in c) for c in f.clauses]
    for x in P:
        z, y = z_of[x], y_of[x]
        clauses.append((-z, -x, y))
        clauses.append((-z, x, -y))
    psi = CnfFormula(2 * n + len(P), tuple(clauses))
    return PadoaInstance(psi, y_of, z_of, n)


def definability_query_assumptions(inst: PadoaInstance, target: int,
                                   active: Iterable[int]) -> list[int]:
    """Assumptions whose UNSAT answer means ``target`` is defined by ``active``."""
    if target not in inst.z_of:
        raise ValueError(f"variable {target} is not in the projection set")
    active = list(active)
    for j in active:
        if j == target or j not in inst.z_of:
            raise ValueError(f"active variable {j} must be a projection variable other than the target")
    return [inst.z_of[j] for j in active] + [target, -inst.y_of[target]]
