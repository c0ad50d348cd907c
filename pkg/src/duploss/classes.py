"""Reachability classes of bounded-width duplication-loss and their
forbidden-pattern bases.

The class with parameters (K, p) holds every permutation (of any size)
reachable from the identity in at most p steps of width at most K.  Because
no-op steps exist, "at most p" and "exactly p" coincide.  The class is closed
downward under pattern containment, so it is also the avoider set of a basis
of minimal forbidden patterns; for p = 1 that basis has a closed form.

Exhaustive operations breadth-first-search the successor relation from the
identity, with one memoized search per (size, effective width) pair.  They
refuse sizes beyond a cap (default 10, overridable via the DUPLOSS_ENUM_CAP
environment variable or a ``cap`` argument) since S_11 and up are beyond desk
scale.
"""

from __future__ import annotations

import itertools
import math
import os
from dataclasses import dataclass

from .errors import BudgetExceededError, InfiniteWidthError, InvalidWidthError
from .permutation import Permutation, contains_pattern, delete
from .steps import successor_values

__all__ = [
    "DEFAULT_ENUMERATION_CAP",
    "ClassSpec",
    "PatternBasis",
    "one_step_blockers",
    "one_step_basis",
    "enumerate_class",
    "is_member",
    "minimal_forbidden_basis",
    "bfs_min_steps",
    "is_antichain",
    "basis_to_json",
    "clear_search_cache",
]

DEFAULT_ENUMERATION_CAP = 10


@dataclass(frozen=True)
class ClassSpec:
    """Parameters (width limit, step budget) of a reachability class."""

    width_limit: int | float
    budget: int

    def __post_init__(self):
        if self.width_limit < 2:
            raise InvalidWidthError(f"width limit must be >= 2, got {self.width_limit}")
        if self.budget < 0:
            raise ValueError(f"step budget must be >= 0, got {self.budget}")

    def effective_width(self, n: int) -> int:
        """Width limit actually usable at size n (infinity acts as n)."""
        return n if math.isinf(self.width_limit) else min(int(self.width_limit), n)


@dataclass(frozen=True)
class PatternBasis:
    """A set of forbidden patterns, flagged when it forms an antichain
    (no element is a pattern of another)."""

    patterns: frozenset[Permutation]
    antichain: bool
    provenance: str  # "theorem-constructed" | "brute-force"

    def sorted_patterns(self) -> list[Permutation]:
        return sorted(self.patterns, key=lambda p: (len(p), p.values))


def _resolve_cap(cap: int | None) -> int:
    if cap is not None:
        return cap
    env = os.environ.get("DUPLOSS_ENUM_CAP")
    return int(env) if env else DEFAULT_ENUMERATION_CAP


def _check_cap(n: int, cap: int | None) -> None:
    limit = _resolve_cap(cap)
    if n > limit:
        raise BudgetExceededError(
            f"size {n} exceeds the enumeration cap {limit}; raise DUPLOSS_ENUM_CAP or pass cap="
        )


class _LayeredSearch:
    """Breadth-first layers of the successor relation from identity(n).

    ``dist`` maps each visited one-line tuple to its step distance; layers are
    expanded on demand and kept, so later queries at the same (n, width) reuse
    all earlier work.
    """

    def __init__(self, n: int, width: int):
        self.n = n
        self.width = width
        start = tuple(range(1, n + 1))
        self.dist: dict[tuple[int, ...], int] = {start: 0}
        self.frontier: list[tuple[int, ...]] = [start]
        self.depth = 0

    def _expand_layer(self) -> None:
        nxt = []
        dist = self.dist
        depth = self.depth + 1
        for state in self.frontier:
            for succ in successor_values(state, self.width):
                if succ not in dist:
                    dist[succ] = depth
                    nxt.append(succ)
        self.frontier = nxt
        self.depth = depth

    def ensure_depth(self, depth: int) -> None:
        while self.depth < depth and self.frontier:
            self._expand_layer()

    def distance(self, state: tuple[int, ...]) -> int:
        """Minimal step count to ``state``; expands until found."""
        while state not in self.dist:
            if not self.frontier:
                raise RuntimeError(f"state {state} unreachable at width {self.width}")
            self._expand_layer()
        return self.dist[state]

    def within(self, state: tuple[int, ...], budget: int) -> bool:
        while state not in self.dist and self.depth < budget and self.frontier:
            self._expand_layer()
        return self.dist.get(state, budget + 1) <= budget


_searches: dict[tuple[int, int], _LayeredSearch] = {}


def _search(n: int, width: int) -> _LayeredSearch:
    key = (n, width)
    if key not in _searches:
        _searches[key] = _LayeredSearch(n, width)
    return _searches[key]


def clear_search_cache() -> None:
    _searches.clear()


def enumerate_class(spec: ClassSpec, n: int, cap: int | None = None) -> frozenset[Permutation]:
    """All size-n permutations reachable within the spec's budget."""
    _check_cap(n, cap)
    search = _search(n, spec.effective_width(n))
    search.ensure_depth(spec.budget)
    return frozenset(
        Permutation(state) for state, d in search.dist.items() if d <= spec.budget
    )


def is_member(perm: Permutation, spec: ClassSpec, cap: int | None = None) -> bool:
    """Whether ``perm`` is reachable within the spec's budget."""
    _check_cap(len(perm), cap)
    search = _search(len(perm), spec.effective_width(len(perm)))
    return search.within(perm.values, spec.budget)


def bfs_min_steps(perm: Permutation, width_limit: int | float, cap: int | None = None) -> int:
    """Minimal number of width-bounded steps building ``perm`` from identity."""
    if width_limit < 1:
        raise InvalidWidthError(f"width limit must be >= 1, got {width_limit}")
    n = len(perm)
    _check_cap(n, cap)
    width = n if math.isinf(width_limit) else min(int(width_limit), n)
    return _search(n, max(width, 1)).distance(perm.values)


def one_step_blockers(width_limit: int) -> frozenset[Permutation]:
    """The one-descent permutations of size K+1 that no single width-K step
    can produce: those not starting with 1 and not ending with K+1.

    There are exactly 2^(K-1) of them: the first increasing run is
    {K+1} union S for any S subset of {2..K}.
    """
    if isinstance(width_limit, float) and math.isinf(width_limit):
        raise InfiniteWidthError("blocker set is defined for finite width limits only")
    k = int(width_limit)
    if k < 2:
        raise InvalidWidthError(f"width limit must be >= 2, got {k}")
    out = []
    rest = range(2, k + 1)
    for r in range(k):
        for subset in itertools.combinations(rest, r):
            first_run = sorted(subset) + [k + 1]
            second_run = sorted(set(range(1, k + 1)) - set(subset))
            out.append(Permutation(first_run + second_run))
    return frozenset(out)


def one_step_basis(width_limit: int) -> PatternBasis:
    """The closed-form forbidden-pattern basis of the one-step class:
    {321, 3142, 2143} plus the blocker set, 3 + 2^(K-1) patterns in all.

    For K = 2 this generating set is not an antichain (3142 contains 231);
    from K = 3 on it is, and the flag is computed honestly either way.
    """
    two_descent_minimal = {
        Permutation((3, 2, 1)),
        Permutation((3, 1, 4, 2)),
        Permutation((2, 1, 4, 3)),
    }
    patterns = frozenset(two_descent_minimal | one_step_blockers(width_limit))
    return PatternBasis(patterns, is_antichain(patterns), "theorem-constructed")


def is_antichain(patterns: frozenset[Permutation]) -> bool:
    """No element of ``patterns`` is a (strict or equal) pattern of another."""
    items = sorted(patterns, key=len)
    for i, small in enumerate(items):
        for big in items[i + 1 :]:
            if len(small) < len(big) and contains_pattern(big, small):
                return False
    return True


def minimal_forbidden_basis(
    spec: ClassSpec, max_size: int, cap: int | None = None
) -> PatternBasis:
    """Brute-force minimal forbidden patterns up to ``max_size``: the
    non-members all of whose one-element deletions are members.

    Downward closure of the class makes one-element-deletion minimality
    equivalent to pattern-minimality, so the result is an antichain.
    """
    _check_cap(max_size, cap)
    minimal: list[Permutation] = []
    for n in range(1, max_size + 1):
        members = enumerate_class(spec, n, cap)
        smaller = enumerate_class(spec, n - 1, cap) if n > 1 else frozenset()
        for candidate in _all_perms(n):
            if candidate in members:
                continue
            if all(delete(candidate, pos) in smaller for pos in range(1, n + 1)):
                minimal.append(candidate)
    return PatternBasis(frozenset(minimal), True, "brute-force")


def _all_perms(n: int):
    for vals in itertools.permutations(range(1, n + 1)):
        yield Permutation(vals)


def basis_to_json(
    basis: PatternBasis,
    width_limit: int | float,
    budget: int,
    max_size: int | None,
) -> dict:
    limit = "inf" if math.isinf(width_limit) else int(width_limit)
    return {
        "patterns": [str(p) for p in basis.sorted_patterns()],
        "K": limit,
        "p": budget,
        "max_size": max_size,
        "antichain": basis.antichain,
        "provenance": basis.provenance,
    }
