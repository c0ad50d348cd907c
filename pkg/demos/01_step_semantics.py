"""One tandem duplication - random loss step, and what a single step can reach.

A step duplicates a contiguous window right after itself, then loses one copy
of each duplicated entry.  Choosing which copy survives splits the window into
a kept-first part and a kept-second part, each in its original order.
"""

from duploss import (
    DupLossStep,
    apply_step,
    descent_count,
    identity,
    inversions_created,
    successors,
)

# Duplicate the width-4 window 3 4 5 6 of 1 2 3 4 5 6 7, keep offsets {2, 3}
# (the entries 4 and 5) in the first copy, so 3 and 6 survive in the second.
start = identity(7)
step = DupLossStep(start=3, width=4, keep=frozenset({2, 3}))
print(f"{start}  --step(start=3, width=4, keep={{2,3}})-->  {apply_step(start, step)}")

# Keeping everything (or nothing) in the first copy is a no-op.
print("keep all:", apply_step(start, DupLossStep(3, 4, frozenset({1, 2, 3, 4}))))
print("keep none:", apply_step(start, DupLossStep(3, 4, frozenset())))

# One step from the identity creates at most one descent, which is why
# single-step reachability is governed by descent structure.
for width in (2, 3):
    reachable = successors(identity(3), width)
    print(f"\none step of width <= {width} from 1,2,3 reaches:")
    for p in sorted(reachable, key=lambda q: q.values):
        print(f"  {p}   descents: {descent_count(p)}")

# A width-k step creates at most floor(k^2/4) inversions: keeping i entries
# first can invert only the i*(k-i) pairs that straddle the split.
print("\nmax inversions created by one width-k step on the sorted window:")
import itertools

for width in range(2, 7):
    best = max(
        inversions_created(identity(width), DupLossStep(1, width, frozenset(keep)))
        for r in range(width + 1)
        for keep in itertools.combinations(range(1, width + 1), r)
    )
    print(f"  k={width}: {best}  (= floor(k^2/4) = {width * width // 4})")
