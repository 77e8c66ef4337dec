"""Exception hierarchy shared by all ucycles modules."""


class UcycleError(Exception):
    """Base class for every error raised by this package."""


class InvalidInputError(UcycleError, ValueError):
    pass


class MalformedWindowError(InvalidInputError):
    """A length-n window contains a repeated letter."""

    def __init__(self, position, window):
        self.position = position
        self.window = tuple(window)
        super().__init__(
            f"window starting at position {position} has repeated letters: {self.window}"
        )


class CapacityError(UcycleError):
    """The requested size exceeds a configured resource guard."""


class PreconditionError(UcycleError):
    pass
