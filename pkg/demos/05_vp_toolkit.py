"""Value-position vectors: the region a scenario must touch.

Each displaced value spans the positions between where it sits and where it
belongs; the union of those spans (the vp-domain) bounds how much of the
permutation any scenario has to move.  Members of the (K, p) class have
vp-domains of at most K*p elements, and minimal forbidden patterns of the
class at most 2*K*p + 2 -- the key to the finite-basis argument.
"""

from duploss import (
    ClassSpec,
    Permutation,
    enumerate_class,
    format_vp_vectors,
    free_window_decomposition,
    minimal_forbidden_basis,
    quasi_diagonal_values,
    removal_span_stability,
    safe_removal_position,
    vp_domain,
)

sigma = Permutation([4, 1, 2, 3, 5, 7, 6])
print(format_vp_vectors(sigma))

decomp = free_window_decomposition(sigma)
print(f"\nvp windows: {decomp.vp_windows}, free windows: {decomp.free_windows}")
print("free-window entries are fixpoints:",
      all(sigma.value_at(i) == i for a, b in decomp.free_windows for i in range(a, b + 1)))

# Removal facts behind the basis size bound:
print(f"\nevery removal shifts each span size by at most one: "
      f"{removal_span_stability(sigma)}")
pos = safe_removal_position(sigma)
print(f"a removal adding at most one fixpoint: position {pos} (value {sigma.value_at(pos)})")
print(f"quasi-diagonal values (the only fixpoint candidates): "
      f"{sorted(quasi_diagonal_values(sigma))}")

# Domain bounds in action.
spec = ClassSpec(2, 2)
members = enumerate_class(spec, 6)
print(f"\n(K=2, p=2) members of size 6: {len(members)}; "
      f"max vp-domain size {max(len(vp_domain(p)) for p in members)} (bound {2 * 2})")
basis = minimal_forbidden_basis(spec, 7)
print(f"minimal forbidden patterns up to size 7: {len(basis.patterns)}; "
      f"max vp-domain size {max(len(vp_domain(p)) for p in basis.patterns)} "
      f"(bound {2 * 2 * 2 + 2})")
