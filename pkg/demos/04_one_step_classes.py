"""Reachability classes are pattern-avoiding classes.

Anything reachable in p bounded steps stays reachable after deleting an
entry, so the class of reachable permutations is closed downward under
pattern containment: it equals the avoider set of its minimal forbidden
patterns.  For one step of width K that basis has a closed form:
{321, 3142, 2143} plus the 2^(K-1) one-descent permutations of size K+1
that neither start with 1 nor end with K+1.
"""

from duploss import (
    ClassSpec,
    Permutation,
    basis_to_json,
    contains_pattern,
    enumerate_class,
    is_member,
    minimal_forbidden_basis,
    one_step_basis,
    one_step_blockers,
)

width = 4
print(f"blockers for width {width} (one descent, size {width + 1}, pinned ends):")
for p in sorted(one_step_blockers(width), key=lambda q: q.values):
    print(f"  {p}")

basis = one_step_basis(width)
print(f"\nclosed-form basis: {len(basis.patterns)} patterns "
      f"(3 + 2^{width - 1}), antichain: {basis.antichain}")

brute = minimal_forbidden_basis(ClassSpec(width, 1), max_size=width + 1)
print(f"brute-force minimal basis equals it: {brute.patterns == basis.patterns}")

# The duality in action: avoiding the basis == being reachable in one step.
probe = Permutation([1, 2, 5, 3, 4, 6])
avoids = not any(contains_pattern(probe, b) for b in basis.patterns)
print(f"\n{probe}: avoids basis = {avoids}, "
      f"one-step member = {is_member(probe, ClassSpec(width, 1))}")

# Class sizes by length, for one and two steps of width 3.
print("\nclass sizes |C| at width 3:")
print("  n      1 step   2 steps")
for n in range(2, 8):
    one = len(enumerate_class(ClassSpec(3, 1), n))
    two = len(enumerate_class(ClassSpec(3, 2), n))
    print(f"  {n}    {one:7d}   {two:7d}")

# For two or more steps only a size bound on basis elements is known,
# (Kp+2)^2 - 2; the brute-force basis stays comfortably below it.
spec = ClassSpec(2, 2)
basis22 = minimal_forbidden_basis(spec, max_size=7)
largest = max(len(p) for p in basis22.patterns)
print(f"\nminimal forbidden patterns of (K=2, p=2) up to size 7: "
      f"{len(basis22.patterns)}, largest {largest} (bound {(2 * 2 + 2) ** 2 - 2})")
print(basis_to_json(basis22, 2, 2, 7)["patterns"])
