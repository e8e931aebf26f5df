"""Exception types shared across the engine."""


class NarrowDotsError(Exception):
    """Base class for all engine errors."""


class IllegalMoveError(NarrowDotsError):
    """Raised when a cut is not legal in the given position."""


class UnsupportedSpecError(NarrowDotsError):
    """Raised when the constructive strategy has no covered plan for a spec."""


class StrategyViolationError(NarrowDotsError):
    """Raised when no quasi-mirroring rule applies to the opponent's move."""

    def __init__(self, message, line=None):
        super().__init__(message)
        self.line = list(line) if line else []


class MemoLimitExceeded(NarrowDotsError):
    """Raised when the solver's memo table outgrows its entry budget."""


class EncodingError(NarrowDotsError):
    """Raised for malformed serialized states or edge ids."""
