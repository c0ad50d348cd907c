"""Benchmark campaigns: seeded sampling, certified bounds, CSV emission.

Every row records its own seed, so any row can be regenerated; every
scenario is replay-verified and checked against the per-permutation lower
bound max(ceil(log2(desc+1)), ceil(inversions / floor(K^2/4))) before it is
emitted.  The CSV is byte-stable for a fixed seed (timings are opt-in).
"""

from duploss import (
    WidthPolicy,
    lower_bound_steps,
    random_permutation,
    rows_to_csv,
    run_benchmark,
)

# A permutation is reproducible from its (n, seed) pair alone.
print("seeded sample:", random_permutation(12, 20240601))
print("same seed:    ", random_permutation(12, 20240601))

# Worst-case lower bounds for a few (n, K): the inversion term rules when K
# is small, the log term when K is comparable to n.
print("\nworst-case lower bounds:")
for n, k in ((6, 2), (64, 4), (64, 8), (64, 64)):
    print(f"  n={n:3d} K={k:3d}: {lower_bound_steps(n, k)}")

rows = run_benchmark(WidthPolicy("constant", 8), sizes=[32, 64, 128], samples=5, seed=7)
print("\nbucket campaign at K=8 (seed -1 marks the reversed identity):")
print(rows_to_csv(rows))

means = {}
for row in rows:
    if row.seed != -1:
        means.setdefault(row.n, []).append(row.steps)
print("mean steps vs n^2/K^2:")
for n, steps in sorted(means.items()):
    mean = sum(steps) / len(steps)
    print(f"  n={n:4d}: mean {mean:8.1f}   n^2/K^2 = {n * n / 64:8.1f}")
