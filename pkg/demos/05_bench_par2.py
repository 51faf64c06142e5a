"""
Benchmarking with PAR-2
=======================

Unfinished runs are charged twice the timeout.
"""

import tempfile
from pathlib import Path

from indsupport.bench import bench, records_to_csv
from indsupport.cnf import to_dimacs
from indsupport.generators import random_kcnf, tseitin_circuit

tmp = Path(tempfile.mkdtemp())
paths = []
for i in range(3):
    p = tmp / f"circuit{i}.cnf"
    p.write_text(to_dimacs(tseitin_circuit(5, 20, seed=i)))
    paths.append(p)
# a large random instance that will not finish inside the tiny timeout
hard = tmp / "random.cnf"
hard.write_text(to_dimacs(random_kcnf(300, 1278, 3, seed=1)))
paths.append(hard)

records, score = bench(paths, timeout=0.5)
print(records_to_csv(records))
print(f"PAR-2: {score:.3f}")
