"""Exception types shared across the package."""


class MsetDimError(Exception):
    """Base class for all errors raised by msetdim."""


class GraphError(MsetDimError, ValueError):
    """Malformed graph input (bad index, self-loop, bad encoding)."""


class DisconnectedGraphError(MsetDimError, ValueError):
    """Raised where a connected graph is required."""


class GuardExceededError(MsetDimError, RuntimeError):
    """An exhaustive search would exceed one of its configured guards."""


class FormulaError(MsetDimError, ValueError):
    """Invalid CNF input. ``line`` is the 1-based source line when known."""

    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
