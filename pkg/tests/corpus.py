"""Seeded instance corpus shared by the property and acceptance tests."""

import random

from indsupport.generators import (add_noise, random_kcnf, random_projection,
                                   tseitin_circuit, xor_chain)


def base_formulas(seed=2024):
    rng = random.Random(seed)
    out = []
    for _ in range(250):
        n = rng.randint(6, 16)
        density = rng.uniform(2.0, 5.0)
        out.append(("random3", random_kcnf(n, max(1, round(density * n)), 3, rng)))
    for _ in range(150):
        ni = rng.randint(2, 6)
        ng = rng.randint(1, 16 - ni)
        out.append(("tseitin", tseitin_circuit(ni, ng, rng)))
    for _ in range(60):
        length = rng.randint(2, 5)
        count = rng.randint(1, max(1, 15 // (length - 1) - 1))
        out.append(("xorchain", xor_chain(length, count, rng)))
    for _ in range(40):
        ni = rng.randint(2, 5)
        f = tseitin_circuit(ni, rng.randint(2, 9), rng)
        out.append(("noisy", add_noise(f, rng.randint(1, 3), 3, rng)))
    return out


def corpus(seed=2024, max_vars=16):
    """Every base formula once unprojected and once with a random projection set."""
    rng = random.Random(seed + 1)
    items = []
    for kind, f in base_formulas(seed):
        if f.num_vars > max_vars:
            continue
        items.append((kind, f))
        items.append((kind + "/proj", random_projection(f, rng)))
    return items
