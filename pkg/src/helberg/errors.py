class HelbergError(Exception):
    """Base class for errors raised by this package."""


class InvalidParametersError(HelbergError, ValueError):
    pass


class BudgetExceededError(HelbergError):
    """Raised when an exhaustive enumeration would visit more than the allowed number of words."""


class UndecodableError(HelbergError):
    """The received word is not within the decoder's contract for this codebook."""
