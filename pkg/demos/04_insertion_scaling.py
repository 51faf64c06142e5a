"""
Assumption insertions: re-solving versus staying inside one search
==================================================================

Re-solving from scratch re-inserts every selector for every query, so the
count grows with the square of the projection size. Keeping the selectors
on the trail between queries makes it grow linearly.
"""

import numpy as np

from indsupport.generators import shared_input_and_family
from indsupport.implicit import ImplicitStats, integrated_implicit, simple_search

sizes = np.array([50, 100, 200, 400])
counts = np.zeros((2, len(sizes)), dtype=np.int64)
for j, p in enumerate(sizes):
    f = shared_input_and_family(int(p), seed=int(p))
    for i, search in enumerate((simple_search, integrated_implicit)):
        stats = ImplicitStats()
        search(f, stats=stats)
        counts[i, j] = stats.assumption_insertions

print("p:         ", sizes)
print("simple:    ", counts[0])
print("integrated:", counts[1])
print("doubling ratios, simple:    ", np.round(counts[0, 1:] / counts[0, :-1], 2))
print("doubling ratios, integrated:", np.round(counts[1, 1:] / counts[1, :-1], 2))
