"""
Recovering gate definitions from clauses
========================================

Tseitin encodings leave their gates visible in the clause structure.
"""

from indsupport.cnf import CnfFormula
from indsupport.generators import and_clauses, xor_clauses
from indsupport.gates import find_xor_gates, recover_gates

# x4 <-> x1 & x2, and x1 ^ x3 ^ x5 == 1
clauses = and_clauses(4, 1, 2) + xor_clauses([1, 3, 5], rhs=True)
f = CnfFormula.from_clauses(clauses)

print("clauses:", f.clauses)
for g in recover_gates(f):
    print("gate:", g)

# a length-3 parity constraint gives one definition per variable
print("parity constraints:", find_xor_gates(f))
