"""Exception types shared across the library."""


class ArgumentError(ValueError):
    """A documented precondition on an operation's arguments was violated."""


class FormatError(ValueError):
    """Malformed graph6 / .cel / certificate input."""


class InternalInvariantError(RuntimeError):
    """A state the underlying theorems rule out; always indicates a bug."""
