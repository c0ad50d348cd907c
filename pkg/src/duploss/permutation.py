"""Permutations in one-line notation, with the statistics and classical
pattern-containment primitives the rest of the package is built on.

Conventions used throughout the package:

- A permutation of size n is a bijection on {1..n}, stored as the tuple
  ``(sigma_1, ..., sigma_n)`` of its one-line notation.
- Positions and values are both 1-indexed.  ``value_at(i)`` is sigma_i and
  ``position_of(v)`` is the i with sigma_i = v.
- The text form is comma-separated one-line notation, e.g. ``"5,2,4,3,1,6"``.

All operations are pure; ``Permutation`` objects are immutable and hashable.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .errors import DuplicateValueError, OutOfRangeError, PositionOutOfRangeError

__all__ = [
    "Permutation",
    "Occurrence",
    "from_one_line",
    "parse_one_line",
    "identity",
    "reversed_identity",
    "standardize",
    "descents",
    "descent_count",
    "inversions",
    "ascending_run_partition",
    "contains_pattern",
    "occurrences",
    "delete",
    "all_permutations",
]


class Permutation:
    """An immutable permutation of {1..n} in one-line notation.

    >>> Permutation([5, 2, 4, 3, 1, 6])
    Permutation([5, 2, 4, 3, 1, 6])
    >>> len(Permutation([2, 1, 3]))
    3
    >>> str(Permutation([5, 2, 4, 3, 1, 6]))
    '5,2,4,3,1,6'
    """

    __slots__ = ("values",)

    values: tuple[int, ...]

    def __init__(self, values: Iterable[int]):
        vals = tuple(values)
        n = len(vals)
        seen = [False] * n
        for v in vals:
            if not isinstance(v, int) or v < 1 or v > n:
                raise OutOfRangeError(f"value {v!r} outside 1..{n}")
            if seen[v - 1]:
                raise DuplicateValueError(f"value {v} appears more than once")
            seen[v - 1] = True
        object.__setattr__(self, "values", vals)

    def __setattr__(self, name, value):
        raise AttributeError("Permutation is immutable")

    def __len__(self) -> int:
        return len(self.values)

    def __iter__(self) -> Iterator[int]:
        return iter(self.values)

    def __eq__(self, other) -> bool:
        return isinstance(other, Permutation) and self.values == other.values

    def __hash__(self) -> int:
        return hash(self.values)

    def __repr__(self) -> str:
        return f"Permutation({list(self.values)})"

    def __str__(self) -> str:
        return ",".join(str(v) for v in self.values)

    def value_at(self, position: int) -> int:
        """sigma_i for a 1-indexed position i."""
        if not 1 <= position <= len(self.values):
            raise PositionOutOfRangeError(f"position {position} outside 1..{len(self.values)}")
        return self.values[position - 1]

    def position_of(self, value: int) -> int:
        """The 1-indexed position holding ``value``."""
        if not 1 <= value <= len(self.values):
            raise OutOfRangeError(f"value {value} outside 1..{len(self.values)}")
        return self.values.index(value) + 1

    def is_identity(self) -> bool:
        return all(v == i + 1 for i, v in enumerate(self.values))


@dataclass(frozen=True)
class Occurrence:
    """Strictly increasing 1-indexed positions witnessing a pattern."""

    indices: tuple[int, ...]

    def values_in(self, host: Permutation) -> tuple[int, ...]:
        """The value subsequence of ``host`` this occurrence selects."""
        return tuple(host.values[i - 1] for i in self.indices)


def from_one_line(values: Iterable[int]) -> Permutation:
    """Build a permutation from one-line notation, validating bijectivity.

    >>> from_one_line([1, 2, 3]).is_identity()
    True
    """
    return Permutation(values)


def parse_one_line(text: str) -> Permutation:
    """Parse comma-separated one-line notation; "" is the empty permutation."""
    text = text.strip()
    if not text:
        return Permutation(())
    try:
        vals = [int(tok) for tok in text.split(",")]
    except ValueError as exc:
        raise OutOfRangeError(f"cannot parse {text!r} as one-line notation") from exc
    return Permutation(vals)


def identity(n: int) -> Permutation:
    return Permutation(range(1, n + 1))


def reversed_identity(n: int) -> Permutation:
    """n (n-1) ... 2 1, the unique permutation with n-1 descents."""
    return Permutation(range(n, 0, -1))


def standardize(values: Sequence[int]) -> Permutation:
    """The pattern of a sequence of distinct integers: rank-normalize to {1..k}.

    >>> standardize((4, 1, 2, 3, 7, 6))
    Permutation([4, 1, 2, 3, 6, 5])
    """
    order = sorted(values)
    rank = {v: r + 1 for r, v in enumerate(order)}
    return Permutation(rank[v] for v in values)


def descents(perm: Permutation) -> set[int]:
    """Positions i with sigma_i > sigma_{i+1}.

    >>> sorted(descents(Permutation([5, 2, 4, 3, 1, 6])))
    [1, 3, 4]
    """
    v = perm.values
    return {i + 1 for i in range(len(v) - 1) if v[i] > v[i + 1]}


def descent_count(perm: Permutation) -> int:
    v = perm.values
    return sum(1 for i in range(len(v) - 1) if v[i] > v[i + 1])


def inversions(perm: Permutation) -> int:
    """Number of pairs i < j with sigma_i > sigma_j.  O(n^2), fine at desk scale."""
    v = perm.values
    n = len(v)
    return sum(1 for i in range(n) for j in range(i + 1, n) if v[i] > v[j])


def ascending_run_partition(perm: Permutation) -> list[tuple[int, int]]:
    """Maximal increasing contiguous substrings, as 1-indexed (start, end) ranges.

    The number of runs is always descent_count + 1 for nonempty permutations.

    >>> ascending_run_partition(Permutation([5, 2, 4, 3, 1, 6]))
    [(1, 1), (2, 3), (4, 4), (5, 6)]
    """
    v = perm.values
    n = len(v)
    if n == 0:
        return []
    runs = []
    start = 1
    for i in range(1, n):
        if v[i] < v[i - 1]:
            runs.append((start, i))
            start = i + 1
    runs.append((start, n))
    return runs


def _iter_occurrence_indices(host: tuple[int, ...], patt: tuple[int, ...]):
    """Yield 0-based index tuples of occurrences in lexicographic order.

    Backtracking with prefix pruning: a partial choice is extended only while
    it stays order-isomorphic to the corresponding pattern prefix.
    """
    n, k = len(host), len(patt)
    if k == 0:
        yield ()
        return
    if k > n:
        return
    chosen: list[int] = []

    def extend(depth: int, start: int):
        if depth == k:
            yield tuple(chosen)
            return
        for i in range(start, n - (k - depth) + 1):
            v = host[i]
            if all((v > host[j]) == (patt[depth] > patt[d]) for d, j in enumerate(chosen)):
                chosen.append(i)
                yield from extend(depth + 1, i + 1)
                chosen.pop()

    yield from extend(0, 0)


def contains_pattern(host: Permutation, pattern: Permutation) -> bool:
    """True iff some subsequence of ``host`` is order-isomorphic to ``pattern``.

    >>> contains_pattern(Permutation([1, 4, 2, 5, 6, 3]), Permutation([1, 3, 4, 2]))
    True
    >>> contains_pattern(Permutation([1, 4, 2, 5, 6, 3]), Permutation([3, 2, 1]))
    False
    """
    return next(_iter_occurrence_indices(host.values, pattern.values), None) is not None


def occurrences(host: Permutation, pattern: Permutation) -> list[Occurrence]:
    """All occurrences of ``pattern`` in ``host``, lexicographic by index tuple."""
    return [
        Occurrence(tuple(i + 1 for i in idx))
        for idx in _iter_occurrence_indices(host.values, pattern.values)
    ]


def delete(perm: Permutation, position: int) -> Permutation:
    """Remove the entry at ``position`` and rank-normalize the survivors.

    The result is always a pattern of ``perm``.

    >>> delete(Permutation([4, 1, 2, 3, 5, 7, 6]), 5)
    Permutation([4, 1, 2, 3, 6, 5])
    """
    v = perm.values
    if not 1 <= position <= len(v):
        raise PositionOutOfRangeError(f"position {position} outside 1..{len(v)}")
    removed = v[position - 1]
    return Permutation(
        (x - 1 if x > removed else x) for i, x in enumerate(v) if i != position - 1
    )


def all_permutations(n: int) -> Iterator[Permutation]:
    """All n! permutations of size n, in lexicographic order of one-line values."""
    import itertools

    for vals in itertools.permutations(range(1, n + 1)):
        yield Permutation(vals)
