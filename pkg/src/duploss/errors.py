"""Exception types shared across the package."""


class DupLossError(Exception):
    """Base class for all errors raised by this package."""


class DuplicateValueError(DupLossError):
    """A one-line sequence repeats a value, so it is not a permutation."""


class OutOfRangeError(DupLossError):
    """A one-line sequence contains a value outside 1..n."""


class PositionOutOfRangeError(DupLossError):
    """A position index falls outside 1..n."""


class ValueOutOfRangeError(DupLossError):
    """A value falls outside 1..n."""


class WindowOutOfRangeError(DupLossError):
    """A duplication window does not fit inside the permutation."""


class WidthExceededError(DupLossError):
    """A replayed step is wider than the scenario's width limit."""


class NotSortedWindowError(DupLossError):
    """A window that must hold an increasing sequence does not."""


class InvalidWidthError(DupLossError):
    """A width limit below the model's minimum of 2."""


class InfiniteWidthError(DupLossError):
    """An operation that needs a finite width limit was given infinity."""


class TooManyMembersError(DupLossError):
    """More values to convoy than half the window width allows."""


class BudgetExceededError(DupLossError):
    """An exhaustive enumeration would exceed the configured size cap."""


class NoWitnessError(DupLossError):
    """No removal position satisfies the requested property.

    Raised only if a guaranteed witness search comes up empty, which
    would indicate a bug rather than a legitimate input.
    """
