"""Exception hierarchy shared by all engine modules."""


class SupercupError(Exception):
    """Base class for every error raised by the engine."""


class ValidationError(SupercupError, ValueError):
    """Malformed input such as a non-dominant weight or a parse error."""


class DomainError(SupercupError, ValueError):
    """A well-formed input that lies outside an operation's domain."""


class InconsistencyError(SupercupError, RuntimeError):
    """An internal cross-check failed; indicates a bug or a broken assumption."""


class FusionTableRequired(SupercupError):
    """Principal-part fusion needs classification data the engine does not have.

    ``partial`` carries whatever could be computed without it (the blockwise
    decomposition for tensor products).
    """

    def __init__(self, message, partial=None):
        super().__init__(message)
        self.partial = partial
