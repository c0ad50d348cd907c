"""Independent brute-force oracles and shared hypothesis strategies.

Everything here recomputes results from first principles (itertools
enumeration, direct filtering) so that library outputs are checked against
code that shares none of their implementation.
"""

import itertools

from hypothesis import strategies as st

from duploss import Permutation


def rank_pattern(vals):
    """Rank-normalize a sequence of distinct ints to a tuple over 1..k."""
    order = sorted(vals)
    rank = {v: r + 1 for r, v in enumerate(order)}
    return tuple(rank[v] for v in vals)


def brute_occurrence_indices(host, patt):
    """All 1-indexed occurrence index tuples, by full combination scan."""
    out = []
    for combo in itertools.combinations(range(len(host)), len(patt)):
        if rank_pattern([host[i] for i in combo]) == tuple(patt):
            out.append(tuple(i + 1 for i in combo))
    return out


def brute_step_results(vals, start0, width):
    """All outputs of steps on the window [start0, start0+width) (0-indexed),
    over every keep subset, by direct list surgery."""
    window = vals[start0 : start0 + width]
    results = set()
    for r in range(width + 1):
        for kept in itertools.combinations(range(width), r):
            keptv = [window[i] for i in kept]
            lostv = [window[i] for i in range(width) if i not in kept]
            results.add(vals[:start0] + tuple(keptv + lostv) + vals[start0 + width :])
    return results


def brute_successors(vals, width_limit):
    """One-step neighborhood by direct window/subset enumeration."""
    n = len(vals)
    out = {vals}
    for start0 in range(n):
        for width in range(1, min(width_limit, n) + 1):
            if start0 + width > n:
                break
            out |= brute_step_results(vals, start0, width)
    return out


def brute_one_descent(m):
    """All permutations of size m with exactly one descent, by filtering."""
    out = []
    for vals in itertools.permutations(range(1, m + 1)):
        if sum(1 for i in range(m - 1) if vals[i] > vals[i + 1]) == 1:
            out.append(Permutation(vals))
    return out


def descent_positions(vals):
    return {i + 1 for i in range(len(vals) - 1) if vals[i] > vals[i + 1]}


def inversion_count(vals):
    n = len(vals)
    return sum(1 for i in range(n) for j in range(i + 1, n) if vals[i] > vals[j])


@st.composite
def permutations_st(draw, min_n=0, max_n=8):
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    vals = draw(st.permutations(tuple(range(1, n + 1))))
    return Permutation(vals)
