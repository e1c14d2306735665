"""Exception types shared across the package."""


class CapacityError(ValueError):
    """Raised when a construction would exceed the 64-vertex capacity."""


class Graph6ParseError(ValueError):
    """Raised on malformed graph6 input.

    Attributes:
      offset: byte offset of the first offending byte, or the input length
        when the text is truncated.
    """

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset


class InternalConsistencyError(RuntimeError):
    """Two independent computations of the same quantity disagree."""
