"""
Searching for models
====================

Backtracking over the table in flatten order, pruning as soon as an axiom
instance is fully evaluated and fails.
"""

import itertools
import time

import numpy as np
from tgs import SearchSpec, check_all, count_models, enumerate_models, sample_model
from tgs.model_finder import violated_instance

for n, m in [(1, 1), (2, 1), (2, 2), (3, 1)]:
    t0 = time.perf_counter()
    c = count_models(n, m)
    print(f"n={n} m={m}: {c} models ({time.perf_counter() - t0:.2f} s)")

# The eight models on two states, as flat tables.
for t in enumerate_models(2, 1):
    print(t.flat.tolist(), all(check_all(t)))

# Cross-check by brute force over all 256 tables.
hits = sum(violated_instance(2, 1, list(tab)) is None
           for tab in itertools.product(range(2), repeat=8))
print("brute force:", hits)

# Random restarts give a reproducible sample for each seed.
for seed in range(3):
    t = sample_model(SearchSpec(3, 2, "sample", seed=seed))
    print("seed", seed, "->", np.bincount(t.flat, minlength=3))
