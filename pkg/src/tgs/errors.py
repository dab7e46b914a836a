"""Exception hierarchy shared by the whole package."""


class TGSError(Exception):
    """Base class for every error raised by :mod:`tgs`."""


class PreconditionError(TGSError, ValueError):
    """An argument violates a documented precondition (e.g. an empty subset)."""


class PredicateError(TGSError, ValueError):
    """A subset was expected to satisfy a structural predicate but does not."""

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class StructuralError(TGSError, ValueError):
    """Two systems cannot be related, e.g. their mediator lists differ."""


class SizeError(TGSError):
    """A request would scan a space larger than the configured bound."""


class BudgetExceeded(TGSError):
    """A search ran out of its node budget before finishing.

    ``progress`` carries whatever was produced before the cutoff.
    """

    def __init__(self, message, progress=None):
        super().__init__(message)
        self.progress = progress


class ParseError(TGSError):
    """Malformed text input. ``line`` is 1-based, or ``None`` if not applicable."""

    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class BadVersion(ParseError):
    pass


class UnknownName(ParseError):
    pass


class DuplicateTuple(ParseError):
    pass


class MissingTuple(ParseError):
    pass
