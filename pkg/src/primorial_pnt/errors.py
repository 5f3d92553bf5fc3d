"""Exception hierarchy shared by every module."""


class PNTError(Exception):
    """Base class for all errors raised by primorial_pnt."""


class DomainError(PNTError, ValueError):
    """An argument lies outside the mathematical domain of an operation."""


class UnsupportedRangeError(PNTError, ValueError):
    """No exact method is configured to handle the requested magnitude."""


class ResourceLimitError(PNTError):
    """The request would exceed a configured size bound."""


class ThresholdNotFoundError(PNTError, LookupError):
    """A threshold scan finished without finding a valid value."""
