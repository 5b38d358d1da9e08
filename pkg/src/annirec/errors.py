"""Exception types shared across the package."""


class GraphFormatError(ValueError):
    """Raised when graph input text cannot be parsed."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class InvariantError(RuntimeError):
    """An internal consistency check failed.

    This can only be caused by a bug (e.g. a non-maximum matching reaching
    the formula builder), never by user input.
    """


class OracleLimitError(ValueError):
    """The graph is too large for exhaustive enumeration."""


class ResourceExhausted(RuntimeError):
    """A search exceeded its configured node-expansion budget."""
