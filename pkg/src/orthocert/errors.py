"""Exception types shared across the package; the CLI maps them to exit codes."""


class OrthocertError(Exception):
    """Base class for all orthocert errors."""


class DimensionMismatch(OrthocertError):
    """Operands live in different hypercube dimensions."""


class GuardExceeded(OrthocertError):
    """A size or dimension guard for dense or exhaustive work was exceeded."""


class SetFileError(OrthocertError):
    """A vertex-set file is malformed."""


class InadmissibleDistance(OrthocertError):
    """A pairwise distance outside the admissible distance set was found."""

    def __init__(self, message, pair=None):
        super().__init__(message)
        self.pair = pair


class RatioBoundVoid(OrthocertError):
    """The least eigenvalue is non-negative, so the ratio bound says nothing."""


class CertificationError(OrthocertError):
    """A prerequisite check failed, so no certified bound can be emitted."""


class ConsistencyError(OrthocertError):
    """An internal cross-check failed; results must not be trusted."""
