"""Exception hierarchy shared by every module of the package."""


class BollobasError(Exception):
    """Base class for errors raised by this package."""


class ParameterError(BollobasError, ValueError):
    """An argument is outside the range the operation is defined for."""


class GuardError(BollobasError):
    """An enumeration would exceed its configured size guard."""


class NotValidatedError(BollobasError):
    """The input does not satisfy the intersection condition it must satisfy."""


class InvariantError(BollobasError, AssertionError):
    """Two independent computations disagree."""


class FormatError(ParameterError):
    """A JSON document does not follow the expected schema."""
