"""
One definability query
======================

Two copies of the formula, with selector variables forcing agreement on a
chosen set. If the copies cannot disagree on the target, it is defined.
"""

from indsupport.cdcl import Solver
from indsupport.cnf import CnfFormula
from indsupport.oracle import is_defined
from indsupport.padoa import build_padoa, definability_query_assumptions

# x3 <-> x1 & x2
f = CnfFormula.from_clauses([(-3, 1), (-3, 2), (3, -1, -2)])
inst = build_padoa(f)
print("copy of x1, x2, x3:", [inst.y(v) for v in (1, 2, 3)])
print("selectors:", [inst.z(v) for v in (1, 2, 3)])

solver = Solver.from_formula(inst.psi)
for active in ([1], [1, 2]):
    assumps = definability_query_assumptions(inst, 3, active)
    out = solver.solve(assumps)
    print(f"x3 given {active}: {out.status.name:5s} oracle says defined={is_defined(f, 3, active)}")
