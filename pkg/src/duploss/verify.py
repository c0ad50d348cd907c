"""Named property suites, runnable from the command line.

Each suite returns (name, passed, detail) triples; a suite passes when every
check does.  These are the same invariants the test suite pins down, bundled
for CI-style runs: ``lemmas`` covers the vp-vector removal facts, ``closure``
the downward closure of reachability classes under deletion, ``basis`` the
agreement of the closed-form and brute-force bases, and ``whole-genome`` the
descent-count characterization of the unbounded model.
"""

from __future__ import annotations

from typing import Iterable

from .classes import (
    ClassSpec,
    bfs_min_steps,
    enumerate_class,
    minimal_forbidden_basis,
    one_step_basis,
)
from .permutation import (
    Permutation,
    all_permutations,
    contains_pattern,
    delete,
    descent_count,
)
from .scenarios import SubWindowTarget, radix_scenario, replay
from .vp import removal_span_stability, safe_removal_position, vp_domain, vp_vectors

CheckResult = tuple[str, bool, str]

SUITES = ("lemmas", "closure", "basis", "whole-genome")


def _every(name: str, pairs: Iterable[tuple[object, bool]]) -> CheckResult:
    failures = [str(obj) for obj, ok in pairs if not ok]
    if failures:
        return name, False, f"{len(failures)} failures, first: {failures[0]}"
    return name, True, "ok"


def suite_lemmas(max_n: int = 6) -> list[CheckResult]:
    """Removal facts, balance condition, and vp-domain bounds on small sizes."""
    results = []
    perms = [p for n in range(1, max_n + 1) for p in all_permutations(n)]
    results.append(
        _every(
            "removal changes each span size by at most one",
            ((p, removal_span_stability(p)) for p in perms if len(p) >= 2),
        )
    )

    def has_witness(p: Permutation) -> bool:
        try:
            safe_removal_position(p)
            return True
        except Exception:
            return False

    results.append(
        _every(
            "some removal adds at most one fixpoint",
            ((p, has_witness(p)) for p in perms if len(p) >= 2),
        )
    )

    def balanced(p: Permutation) -> bool:
        counts: dict[int, int] = {}
        for vec in vp_vectors(p):
            for v in vec.covered:
                counts[v] = counts.get(v, 0) + 1
        return all(c >= 2 for c in counts.values())

    results.append(
        _every("every covered element lies in two spans", ((p, balanced(p)) for p in perms))
    )

    for width, budget in ((2, 1), (3, 1), (2, 2)):
        spec = ClassSpec(width, budget)
        members = [
            p for n in range(1, max_n + 1) for p in enumerate_class(spec, n)
        ]
        results.append(
            _every(
                f"vp-domain of (K={width}, p={budget}) members has size <= {width * budget}",
                ((p, len(vp_domain(p)) <= width * budget) for p in members),
            )
        )
    return results


def suite_closure(max_n: int = 6) -> list[CheckResult]:
    """Classes are closed under one-element deletion."""
    results = []
    for width, budget in ((2, 1), (3, 1), (2, 2)):
        spec = ClassSpec(width, budget)
        bad = []
        for n in range(2, max_n + 1):
            members = enumerate_class(spec, n)
            smaller = enumerate_class(spec, n - 1)
            for p in members:
                if any(delete(p, i) not in smaller for i in range(1, n + 1)):
                    bad.append(p)
        results.append(
            _every(f"deletion closure of (K={width}, p={budget})", ((p, False) for p in bad))
        )
    return results


def suite_basis(max_n: int = 7, widths: tuple[int, ...] = (2, 3, 4)) -> list[CheckResult]:
    """Closed-form one-step basis agrees with the search, and with the
    brute-force minimal basis where that basis is an antichain."""
    results = []
    for width in widths:
        basis = one_step_basis(width)
        spec = ClassSpec(width, 1)
        bad = []
        for n in range(1, max_n + 1):
            members = enumerate_class(spec, n)
            for p in all_permutations(n):
                avoids = not any(contains_pattern(p, b) for b in basis.patterns)
                if avoids != (p in members):
                    bad.append(p)
        results.append(
            _every(
                f"avoiders of the one-step basis (K={width}) equal the class",
                ((p, False) for p in bad),
            )
        )
    for width in widths:
        # min size 4 so the K=2 antichain (which keeps 2143) is complete
        brute = minimal_forbidden_basis(ClassSpec(width, 1), max(width + 1, 4))
        theorem = one_step_basis(width)
        if width == 2:
            # generating set only: 3142 contains 231, so the antichain drops it
            expected = frozenset(p for p in theorem.patterns if p != Permutation((3, 1, 4, 2)))
        else:
            expected = theorem.patterns
        ok = brute.patterns == expected
        detail = "ok" if ok else f"got {sorted(str(p) for p in brute.patterns)}"
        results.append((f"brute-force basis (K={width}) matches the closed form", ok, detail))
    return results


def suite_whole_genome(max_n: int = 6) -> list[CheckResult]:
    """Unbounded model: search distance equals ceil(log2(desc+1)); the radix
    generator realizes it; classes are exactly descent-bounded sets."""
    results = []
    bad_counts = []
    bad_replay = []
    for n in range(1, max_n + 1):
        for p in all_permutations(n):
            expected = descent_count(p).bit_length()
            if bfs_min_steps(p, n) != expected:
                bad_counts.append(p)
            scenario = radix_scenario(SubWindowTarget(1, p.values), n)
            if scenario.step_count != expected or replay(scenario) != p:
                bad_replay.append(p)
    results.append(
        _every("search distance equals ceil(log2(desc+1))", ((p, False) for p in bad_counts))
    )
    results.append(_every("radix scenario realizes the optimum", ((p, False) for p in bad_replay)))

    bad_class = []
    for n in range(1, min(max_n, 6) + 1):
        for budget in (1, 2):
            members = enumerate_class(ClassSpec(n if n >= 2 else 2, budget), n)
            expected_set = frozenset(
                p for p in all_permutations(n) if descent_count(p) <= (1 << budget) - 1
            )
            if members != expected_set:
                bad_class.append((n, budget))
    results.append(
        _every("unbounded classes are descent-bounded sets", ((x, False) for x in bad_class))
    )
    return results


def run_suite(name: str, max_size: int | None = None) -> list[CheckResult]:
    if name == "lemmas":
        return suite_lemmas(max_size or 6)
    if name == "closure":
        return suite_closure(max_size or 6)
    if name == "basis":
        return suite_basis(max_size or 7)
    if name == "whole-genome":
        return suite_whole_genome(max_size or 6)
    raise ValueError(f"unknown suite {name!r}; choose from {SUITES}")
