"""Domain errors raised by library operations.

Everything here derives from DomainError so the CLI can map domain
failures to a single exit code, distinct from I/O and parse failures.
"""


class DomainError(Exception):
    """Base class for all domain-level failures."""


class NonUniqueSnapError(DomainError):
    """A bar endpoint fell in a sample gap with no spectrum point to snap to."""


class EmptyHorizonError(DomainError):
    """The horizon window admits no valid sample position."""


class IndexOutOfRangeError(DomainError, IndexError):
    """A sample index is outside the module's grid."""


class TooLargeError(DomainError):
    """An enumeration bound was exceeded; the brute-force search refuses to run."""


class ShapeMismatchError(DomainError):
    """Matrix shapes are inconsistent with the module dimensions."""


class OnSpectrumError(DomainError):
    """The parameter value lies on the spectrum, where the index is undefined."""


class InPiSpanError(DomainError):
    """The chosen class is supported on fully infinite bars only."""
