"""Scenario generators: transcripts of duplication-loss steps that build a
target permutation from the identity.

Two generators are provided.

``radix_scenario`` rearranges one window whose current content is increasing.
Entries are labelled by the 0-based index of the maximal increasing run of the
target arrangement they belong to, and one step per label bit (least
significant first) keeps the 0-bit entries in the first copy.  This is a
stable radix sort of the labels and finishes in exactly
ceil(log2(descents + 1)) steps, each spanning the whole window.

``bucket_scenario`` handles arbitrary targets under a width limit K.  Working
right to left in blocks of floor(K/2) positions (plus a leftmost remainder
block of width at most K), phase 1 convoys each block's values into place in
increasing order, and phase 2 runs the radix generator inside each block.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from .errors import (
    InvalidWidthError,
    NotSortedWindowError,
    TooManyMembersError,
    WidthExceededError,
    WindowOutOfRangeError,
)
from .permutation import Permutation, identity
from .steps import DupLossStep, apply_step_to_list, step_from_json, step_to_json

__all__ = [
    "Scenario",
    "SubWindowTarget",
    "radix_scenario",
    "bucket_scenario",
    "bucket_phases",
    "bucket_windows",
    "phase1_move_block",
    "replay",
    "scenario_to_json",
    "scenario_from_json",
]


@dataclass(frozen=True)
class Scenario:
    """An ordered step list replayable from identity(n) under a width limit.

    ``width_limit`` may be ``math.inf`` for the unbounded (whole-permutation)
    model; every step must respect it for the scenario to replay.
    """

    n: int
    width_limit: int | float
    steps: tuple[DupLossStep, ...]

    @property
    def step_count(self) -> int:
        return len(self.steps)


@dataclass(frozen=True)
class SubWindowTarget:
    """A contiguous window plus the arrangement its values should take.

    The window's current content is assumed increasing; ``target`` must be a
    rearrangement of exactly those values.
    """

    start: int
    target: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "target", tuple(self.target))
        if self.start < 1:
            raise WindowOutOfRangeError(f"window start {self.start} must be >= 1")
        if len(set(self.target)) != len(self.target):
            raise ValueError("target arrangement repeats a value")

    @property
    def end(self) -> int:
        return self.start + len(self.target) - 1


def _radix_steps(start: int, target: Sequence[int]) -> list[DupLossStep]:
    """Steps turning the increasing arrangement of ``target``'s values, sitting
    at positions start.., into ``target``.  Exactly descents.bit_length() steps."""
    k = len(target)
    label = {}
    run = 0
    prev = None
    for v in target:
        if prev is not None and v < prev:
            run += 1
        label[v] = run
        prev = v
    window = sorted(target)
    steps = []
    for bit in range(run.bit_length()):
        keep = frozenset(o + 1 for o, v in enumerate(window) if not (label[v] >> bit) & 1)
        steps.append(DupLossStep(start, k, keep))
        window = [v for v in window if not (label[v] >> bit) & 1] + [
            v for v in window if (label[v] >> bit) & 1
        ]
    assert window == list(target)
    return steps


def radix_scenario(target: SubWindowTarget, n: int) -> Scenario:
    """Scenario rearranging one increasing window of identity(n) into ``target``.

    Replaying from identity(n) touches nothing outside the window, so the
    window of the identity must hold exactly the values ``start..end``;
    anything else means the increasing-window precondition cannot hold.
    """
    if target.end > n:
        raise WindowOutOfRangeError(
            f"window [{target.start}, {target.end}] does not fit in size {n}"
        )
    if set(target.target) != set(range(target.start, target.end + 1)):
        raise NotSortedWindowError(
            f"identity window [{target.start}, {target.end}] does not hold values "
            f"{sorted(target.target)}"
        )
    width = len(target.target)
    return Scenario(n, width if width else 1, tuple(_radix_steps(target.start, target.target)))


def bucket_windows(n: int, width_limit: int | float) -> list[tuple[int, int]]:
    """The block decomposition of positions 1..n used by the bucket generator,
    left to right: a remainder block of width <= K, then floor(K/2)-wide blocks
    anchored at the right end."""
    if width_limit < 2:
        raise InvalidWidthError(f"width limit must be >= 2, got {width_limit}")
    if n <= 0:
        return []
    if n <= width_limit:
        return [(1, n)]
    k = int(width_limit)
    half = k // 2
    blocks = math.ceil((n - k) / half)
    windows = [(1, n - blocks * half)]
    for i in range(blocks, 0, -1):
        windows.append((n - i * half + 1, n - (i - 1) * half))
    return windows


def _convoy_steps(
    work: list[int],
    members: frozenset[int],
    target_start: int,
    target_end: int,
    width_limit: int,
) -> list[DupLossStep]:
    """Move ``members`` (currently all at positions <= target_end) rightward so
    they occupy target_start..target_end, preserving both groups' relative
    order; mutates ``work`` and returns the steps taken.

    Each step takes the width-K window starting at the leftmost undelivered
    member (clamped so that the final window ends at target_end), keeps the
    non-members in the first copy and the members in the second, advancing the
    convoy by at least ceil(K/2) positions per step.
    """
    positions = sorted(i + 1 for i, v in enumerate(work[:target_end]) if v in members)
    if len(positions) != len(members):
        raise ValueError("members must all sit at or left of the target block")
    steps: list[DupLossStep] = []
    while positions and positions[0] < target_start:
        s = positions[0]
        if s + width_limit - 1 >= target_end:
            lo, hi = max(1, target_end - width_limit + 1), target_end
        else:
            lo, hi = s, s + width_limit - 1
        window = work[lo - 1 : hi]
        keep = frozenset(o + 1 for o, v in enumerate(window) if v not in members)
        step = DupLossStep(lo, hi - lo + 1, keep)
        apply_step_to_list(work, step)
        steps.append(step)
        inside = sum(1 for v in window if v in members)
        positions = [p for p in positions if p > hi] + list(range(hi - inside + 1, hi + 1))
        positions.sort()
    return steps


def phase1_move_block(
    perm: Permutation,
    members: Sequence[int] | frozenset[int],
    target_range: tuple[int, int],
    width_limit: int,
) -> list[DupLossStep]:
    """Steps that convoy ``members`` into ``target_range`` of ``perm``.

    Requires at most floor(K/2) members (so every window keeps room to slide
    past them), exactly as many members as target positions, and no member to
    the right of the target block.
    """
    if width_limit < 2:
        raise InvalidWidthError(f"width limit must be >= 2, got {width_limit}")
    member_set = frozenset(members)
    if len(member_set) > width_limit // 2:
        raise TooManyMembersError(
            f"{len(member_set)} members exceed floor({width_limit}/2)"
        )
    t1, t2 = target_range
    if not (1 <= t1 <= t2 <= len(perm)):
        raise WindowOutOfRangeError(f"target range {target_range} outside 1..{len(perm)}")
    if len(member_set) != t2 - t1 + 1:
        raise ValueError("member count must match the target block width")
    if not member_set <= set(perm.values):
        raise ValueError("members must be values of the permutation")
    work = list(perm.values)
    return _convoy_steps(work, member_set, t1, t2, width_limit)


def bucket_phases(
    target: Permutation, width_limit: int | float
) -> tuple[list[DupLossStep], list[DupLossStep]]:
    """The two step lists of the bucket generator for ``target``.

    Phase 1 convoys each block's values into place (rightmost block first),
    leaving every block increasing; phase 2 radix-rearranges the blocks right
    to left, the leftmost remainder block last.
    """
    n = len(target)
    windows = bucket_windows(n, width_limit)
    sigma = target.values
    work = list(range(1, n + 1))
    phase1: list[DupLossStep] = []
    # windows[0] is the leftmost remainder block; convoy the others right to left.
    for t1, t2 in reversed(windows[1:]):
        members = frozenset(sigma[t1 - 1 : t2])
        phase1.extend(_convoy_steps(work, members, t1, t2, int(width_limit)))
    phase2: list[DupLossStep] = []
    for t1, t2 in list(reversed(windows[1:])) + windows[:1]:
        block_target = sigma[t1 - 1 : t2]
        current = work[t1 - 1 : t2]
        if current != sorted(block_target):
            raise NotSortedWindowError(
                f"block [{t1}, {t2}] holds {current}, expected sorted {sorted(block_target)}"
            )
        for step in _radix_steps(t1, block_target):
            apply_step_to_list(work, step)
            phase2.append(step)
    assert tuple(work) == sigma
    return phase1, phase2


def bucket_scenario(target: Permutation, width_limit: int | float) -> Scenario:
    """A width-bounded scenario building ``target`` from the identity.

    For n <= K this degenerates to a single radix call on the whole
    permutation; widths never exceed the limit.
    """
    if width_limit < 2:
        raise InvalidWidthError(f"width limit must be >= 2, got {width_limit}")
    phase1, phase2 = bucket_phases(target, width_limit)
    return Scenario(len(target), width_limit, tuple(phase1 + phase2))


def replay(scenario: Scenario) -> Permutation:
    """Fold the steps over identity(n), validating width and window bounds."""
    work = list(range(1, scenario.n + 1))
    for step in scenario.steps:
        if step.width > scenario.width_limit:
            raise WidthExceededError(
                f"step width {step.width} exceeds limit {scenario.width_limit}"
            )
        if step.end > scenario.n:
            raise WindowOutOfRangeError(
                f"window [{step.start}, {step.end}] does not fit in size {scenario.n}"
            )
        apply_step_to_list(work, step)
    return Permutation(work)


def scenario_to_json(scenario: Scenario) -> dict:
    """JSON form: width limit "inf" when unbounded, plus the replayed result."""
    limit = "inf" if math.isinf(scenario.width_limit) else int(scenario.width_limit)
    return {
        "n": scenario.n,
        "width_limit": limit,
        "steps": [step_to_json(s) for s in scenario.steps],
        "final": str(replay(scenario)),
    }


def scenario_from_json(obj: dict) -> Scenario:
    limit = obj["width_limit"]
    width_limit = math.inf if limit == "inf" else int(limit)
    scenario = Scenario(
        int(obj["n"]), width_limit, tuple(step_from_json(s) for s in obj["steps"])
    )
    if "final" in obj and str(replay(scenario)) != obj["final"]:
        raise ValueError("scenario transcript does not replay to its recorded final state")
    return scenario
