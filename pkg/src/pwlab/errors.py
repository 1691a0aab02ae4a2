"""Exception types shared across the package."""


class PwlabError(Exception):
    """Base class for all library errors."""


class BudgetExceeded(PwlabError):
    """An enumeration would exceed its configured budget.

    ``partial`` optionally carries whatever was known when the budget hit
    (for example a :class:`~pwlab.search.RedundancyResult` with a lower bound).
    """

    def __init__(self, message, partial=None):
        super().__init__(message)
        self.partial = partial


class DimensionGuard(PwlabError):
    """Cone dimension is above the configured guard."""


class ZeroVector(PwlabError, ValueError):
    """A pseudoweight was requested for the zero vector."""


class NotRegular(PwlabError):
    pass


class Disconnected(PwlabError):
    pass


class DegenerateSpectrum(PwlabError):
    pass


class ParseError(PwlabError, ValueError):
    """Malformed matrix file or code specification."""
