"""Exception types raised by the engine."""


class HHSumError(Exception):
    """Base class for engine errors."""


class DomainError(HHSumError, ValueError):
    """A parameter lies outside the hypotheses of the requested formula."""


class DivergenceError(DomainError):
    """The requested series or constant diverges."""
