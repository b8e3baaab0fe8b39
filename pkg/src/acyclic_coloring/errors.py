from __future__ import annotations


class InvariantViolation(RuntimeError):
    """A guarantee the algorithm relies on failed at runtime.

    Never a recoverable condition: it means the palette is too small for the
    graph or there is a bug in the state handling.
    """


class StepCapExceeded(RuntimeError):
    """The step budget ran out before the run terminated.

    ``record`` holds the partial execution record; ``state`` the coloring at
    the moment of truncation (None when raised before any state existed).
    """

    def __init__(self, message, record=None, state=None):
        super().__init__(message)
        self.record = record
        self.state = state
