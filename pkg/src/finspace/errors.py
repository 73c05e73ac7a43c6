"""Exception types shared across the package."""


class FinspaceError(Exception):
    """Base class for all errors raised by this package."""


class ValidationError(FinspaceError):
    """A structural invariant failed at construction time."""


class CapExceeded(FinspaceError):
    """An enumeration would exceed its configured size cap."""


class PreconditionError(FinspaceError):
    """An operation was invoked outside its domain of validity."""


class ParseError(FinspaceError):
    """A workspace document failed to parse or validate.

    Carries the path of the offending record so reports can point at it.
    """

    def __init__(self, path, message):
        self.path = path
        super().__init__(f"{path}: {message}")
