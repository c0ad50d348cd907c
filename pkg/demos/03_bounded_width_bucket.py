"""Width-bounded scenarios: convoy values into blocks, then sort each block.

With widths capped at K, the generator cuts the positions into blocks of
floor(K/2) anchored at the right end (plus a leftmost remainder of width at
most K).  Phase 1 convoys each block's values rightward into place, rightmost
block first, leaving every block increasing; phase 2 then runs the unbounded
generator inside each block, which is legal because blocks are narrower
than K.
"""

from duploss import (
    Permutation,
    bucket_phases,
    bucket_scenario,
    bucket_windows,
    replay,
    reversed_identity,
)
from duploss.steps import apply_step_to_list

target = Permutation([2, 10, 1, 7, 6, 5, 8, 9, 3, 4])
width_limit = 6

windows = bucket_windows(len(target), width_limit)
print(f"target {target}, width limit {width_limit}")
print(f"blocks: {windows}")
print("block contents of the target:",
      [tuple(target.values[a - 1 : b]) for a, b in windows])

phase1, phase2 = bucket_phases(target, width_limit)
state = list(range(1, len(target) + 1))
for step in phase1:
    apply_step_to_list(state, step)
pretty = " | ".join(
    ",".join(map(str, state[a - 1 : b])) for a, b in windows
)
print(f"\nafter phase 1 ({len(phase1)} steps): {pretty}")
print("every block now holds its target values in increasing order")

for step in phase2:
    apply_step_to_list(state, step)
print(f"after phase 2 ({len(phase2)} steps): {','.join(map(str, state))}")
assert tuple(state) == target.values

# The reversed identity is the worst case; its cost grows like n^2/K^2.
print("\nreversed identity at width limit 8:")
for n in (64, 128, 256):
    sc = bucket_scenario(reversed_identity(n), 8)
    assert replay(sc) == reversed_identity(n)
    print(f"  n={n:4d}: {sc.step_count:6d} steps,  steps*K^2/n^2 = "
          f"{sc.step_count * 64 / (n * n):.3f}")
