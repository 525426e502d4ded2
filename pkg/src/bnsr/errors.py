"""Exception hierarchy. Each class maps onto one CLI exit code."""


class BNSRError(Exception):
    exit_code = 1


class ParseError(BNSRError, ValueError):
    """Malformed graph or character document."""

    exit_code = 2


class InvalidCharacterError(BNSRError, ValueError):
    """A weight map that is not a character (zero, or constant for BB)."""

    exit_code = 2


class PreconditionError(BNSRError):
    """The question is not defined for this input (disconnected graph, not FP_n, ...)."""

    exit_code = 3


class ResourceCapError(BNSRError):
    """A configured size limit was exceeded."""

    exit_code = 4
