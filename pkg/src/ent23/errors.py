"""Exception types shared across the package."""


class ValidationError(ValueError):
    """An input violates a documented precondition (shape, norm, range, hermiticity)."""


class ConsistencyError(ArithmeticError):
    """An internal cross-check failed, e.g. a trace that must be real came out complex."""


class StateFileError(ValueError):
    """A state file cannot be parsed; the message carries the line/field position."""


class UnsupportedDimensionError(StateFileError):
    """A state file declares dimensions other than (2, 2) or (2, 3)."""
