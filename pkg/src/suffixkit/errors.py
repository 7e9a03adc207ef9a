"""Exception types shared across the package."""


class SuffixkitError(Exception):
    """Base class for all package errors."""


class EmptyInput(SuffixkitError):
    """Raised when asked to index an empty symbol sequence."""


class AlphabetTooSmall(SuffixkitError):
    """Declared alphabet size is below the number of distinct symbols."""


class BadInterval(SuffixkitError):
    """Text interval indices out of range (positions are 1-based, inclusive)."""


class StructureCorrupt(SuffixkitError):
    """An internal consistency check failed during construction."""


class NotSorted(SuffixkitError):
    """An operation that requires edge-sorted input received unsorted input."""


class CapExceeded(SuffixkitError):
    """A brute-force oracle was asked to run above its configured size cap."""
