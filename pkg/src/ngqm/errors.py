"""Exception hierarchy.  Every error raised on purpose derives from NGQMError."""


class NGQMError(Exception):
    """Base class for all package errors."""


class EmptyInputError(NGQMError, ValueError):
    pass


class LengthMismatchError(NGQMError, ValueError):
    pass


class NonpositiveMassError(NGQMError, ValueError):
    pass


class NonpositiveWavenumberError(NGQMError, ValueError):
    pass


class NoBoundStatesError(NGQMError):
    """The linear (j = 1, "2G") dispersion admits no Dirichlet bound states."""


class UnsupportedGeometryError(NGQMError):
    """No closed form exists for the requested geometry order."""


class OutOfDomainError(NGQMError, ValueError):
    pass


class UnnormalizedStateError(NGQMError):
    pass


class UnsupportedPowerError(NGQMError, ValueError):
    pass


class ToleranceNotMetError(NGQMError):
    def __init__(self, message, value=None, error=None):
        super().__init__(message)
        self.value = value
        self.error = error


class StepUnderflowError(NGQMError, ValueError):
    pass


class ConfigError(NGQMError, ValueError):
    pass


class NegativeDensityWarning(UserWarning):
    """A signed odd-order density phi**j went negative."""


class InvalidParameterError(NGQMError, ValueError):
    """A width, quantum number or tolerance outside its allowed range."""
