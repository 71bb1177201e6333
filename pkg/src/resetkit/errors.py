"""Exception hierarchy shared by every resetkit module."""


class ResetKitError(Exception):
    """Base class for all errors raised by resetkit."""


class InputError(ResetKitError, ValueError):
    """An argument is outside the domain of the operation."""


class ParseError(InputError):
    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class MalformedHeaderError(ParseError):
    pass


class IncompleteTableError(ParseError):
    pass


class DuplicateTransitionError(ParseError):
    pass


class IndexRangeError(ParseError):
    pass


class BudgetExceeded(ResetKitError):
    """A search hit its configured resource cap before finishing."""


class OracleFailure(ResetKitError):
    """The SAT oracle crashed or answered outside the protocol.

    Kept distinct from an UNSAT answer so callers never read a crash as "no".
    """


class OracleInconsistency(ResetKitError):
    """Oracle answers contradict each other (e.g. no letter extends a prefix)."""
