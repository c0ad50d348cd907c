"""One tandem duplication - random loss step and the step neighborhood.

A step duplicates the window of ``width`` entries starting at ``start``,
inserts the copy immediately after the original, then deletes one copy of
every duplicated entry.  The net effect keeps the offsets in ``keep`` (in
their original order) followed by the remaining offsets (in their original
order); everything outside the window is untouched.  Width-1 steps and the
keep-everything / keep-nothing masks are legal no-ops.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass, field

from .errors import WindowOutOfRangeError
from .permutation import Permutation, inversions

__all__ = [
    "DupLossStep",
    "apply_step",
    "successors",
    "inversions_created",
    "step_to_json",
    "step_from_json",
]


@dataclass(frozen=True)
class DupLossStep:
    """A duplication-loss event: window ``[start, start+width-1]`` plus the
    set of relative offsets (1..width) retained in the first copy."""

    start: int
    width: int
    keep: frozenset[int] = field(default_factory=frozenset)

    def __post_init__(self):
        if self.start < 1:
            raise ValueError(f"start must be >= 1, got {self.start}")
        if self.width < 1:
            raise ValueError(f"width must be >= 1, got {self.width}")
        keep = frozenset(self.keep)
        object.__setattr__(self, "keep", keep)
        if not keep <= set(range(1, self.width + 1)):
            raise ValueError(f"keep offsets {sorted(keep)} outside 1..{self.width}")

    @property
    def end(self) -> int:
        return self.start + self.width - 1


def _check_window(step: DupLossStep, n: int) -> None:
    if step.end > n:
        raise WindowOutOfRangeError(
            f"window [{step.start}, {step.end}] does not fit in size {n}"
        )


def apply_step_to_list(values: list[int], step: DupLossStep) -> None:
    """In-place core of apply_step; callers guarantee the window fits."""
    lo = step.start - 1
    window = values[lo : lo + step.width]
    keep = step.keep
    kept = [window[o - 1] for o in sorted(keep)]
    lost = [window[o - 1] for o in range(1, step.width + 1) if o not in keep]
    values[lo : lo + step.width] = kept + lost


def apply_step(perm: Permutation, step: DupLossStep) -> Permutation:
    """Apply one duplication-loss step.

    >>> from .permutation import identity
    >>> apply_step(identity(7), DupLossStep(3, 4, frozenset({2, 3})))
    Permutation([1, 2, 4, 5, 3, 6, 7])
    """
    _check_window(step, len(perm))
    vals = list(perm.values)
    apply_step_to_list(vals, step)
    return Permutation(vals)


@functools.lru_cache(maxsize=None)
def _step_templates(n: int, width_limit: int) -> tuple[tuple[int, int, tuple[int, ...]], ...]:
    """Effect templates (start0, width, output offset order) for all steps of
    width <= width_limit on size-n permutations, skipping the no-op masks.

    A mask is a no-op exactly when its keep set is a prefix {1..j} of the
    window, so those are dropped; enumeration order is windows by
    (start, width) ascending, then masks by binary value ascending.
    """
    templates = []
    top = min(width_limit, n)
    for start in range(1, n + 1):
        for width in range(2, top + 1):
            if start + width - 1 > n:
                break
            prefix_masks = {(1 << j) - 1 for j in range(width + 1)}
            for mask in range(1 << width):
                if mask in prefix_masks:
                    continue
                kept = [o for o in range(width) if (mask >> o) & 1]
                lost = [o for o in range(width) if not (mask >> o) & 1]
                templates.append((start - 1, width, tuple(kept + lost)))
    return tuple(templates)


def successor_values(values: tuple[int, ...], width_limit: int) -> set[tuple[int, ...]]:
    """Raw-tuple successor set; always contains ``values`` itself."""
    out = {values}
    for lo, width, order in _step_templates(len(values), width_limit):
        window = values[lo : lo + width]
        out.add(values[:lo] + tuple(window[o] for o in order) + values[lo + width :])
    return out


def successors(perm: Permutation, width_limit: int) -> set[Permutation]:
    """All permutations reachable from ``perm`` in one step of width <= width_limit,
    deduplicated by output; ``perm`` itself is always included (no-op masks).

    >>> from .permutation import identity
    >>> sorted(str(p) for p in successors(identity(2), 2))
    ['1,2', '2,1']
    """
    if width_limit < 1:
        raise ValueError(f"width limit must be >= 1, got {width_limit}")
    return {Permutation(v) for v in successor_values(perm.values, width_limit)}


def inversions_created(perm: Permutation, step: DupLossStep) -> int:
    """Inversion count change caused by one step (may be negative).

    For a step of width k this is never more than floor(k^2 / 4): new
    inversions only pair a kept-first entry with a kept-second one, giving at
    most i*(k-i) of them when i offsets are kept.
    """
    _check_window(step, len(perm))
    return inversions(apply_step(perm, step)) - inversions(perm)


def step_to_json(step: DupLossStep) -> dict:
    return {"start": step.start, "width": step.width, "keep": sorted(step.keep)}


def step_from_json(obj: dict) -> DupLossStep:
    return DupLossStep(int(obj["start"]), int(obj["width"]), frozenset(int(o) for o in obj["keep"]))
