"""Exception hierarchy.

The CLI maps ``InputError`` to exit code 2 and ``PreconditionError`` to
exit code 3; everything else is a bug.
"""


class HyperconeError(Exception):
    """Base class for all library errors."""


class InputError(HyperconeError, ValueError):
    """Malformed or inconsistent input (shapes, lengths, syntax)."""


class DimensionError(InputError):
    """Number of variables or vector length does not match."""


class PreconditionError(HyperconeError, ValueError):
    """Input is well-formed but violates a mathematical precondition."""


class NotHomogeneousError(PreconditionError):
    pass


class NotRealRootedError(PreconditionError):
    """A restriction that must be real-rooted is not.

    Raised by membership tests; it means the (p, e) context is not hyperbolic.
    """


class OrthantError(PreconditionError):
    """The nonnegative orthant is not contained in the hyperbolicity cone."""

    def __init__(self, message, index):
        super().__init__(message)
        self.index = index


class SearchLimitError(PreconditionError):
    """Requested exhaustive search exceeds the configured size limit."""
