"""Exception types shared across the package."""


class ShiftlabError(Exception):
    """Base class for all package errors."""


class ConfigurationError(ShiftlabError):
    """A parameter is outside its documented range or budget."""


class CoverageError(ShiftlabError):
    """A lookup fell outside the range a table was built for.

    Tables never fall back to on-the-fly primality or factorization;
    callers must size tables up front.
    """


class ResourceCapError(ShiftlabError):
    """A quadratic-cost operation exceeded its safety cap without force."""
