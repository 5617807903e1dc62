"""Exception types shared across the library."""


class PerronError(Exception):
    """Base class for all library errors."""


class ValidationError(PerronError):
    """Invalid input: dimension mismatch, malformed step, violated precondition."""


class StepLimitExceeded(PerronError):
    """An iteration ran past its step limit; carries the partial trace."""

    def __init__(self, message, steps=()):
        super().__init__(message)
        self.steps = tuple(steps)


class InteractiveAborted(PerronError):
    """An interactive session hit end-of-input; carries the partial trace."""

    def __init__(self, message, steps=()):
        super().__init__(message)
        self.steps = tuple(steps)


class InternalError(PerronError):
    """Consistency failure that validated inputs should make impossible."""
