class MuskitError(Exception):
    """Base class for all muskit errors."""


class EmptyText(MuskitError):
    """Raised when an operation requires a nonempty text."""


class EmptyString(MuskitError):
    """Raised when an operation requires a nonempty byte string."""


class PositionOutOfRange(MuskitError):
    """Raised when a 1-based position falls outside the valid range."""


class ParameterTooSmall(MuskitError):
    """Raised when a family parameter is below its minimum."""


class TextTooLargeForOracle(MuskitError):
    """Raised when a text exceeds the brute-force oracle's size cap."""


class BudgetExceeded(MuskitError):
    """Raised when an exhaustive sweep would exceed its text budget."""


class ResultEmpty(MuskitError):
    """Raised when an edit would leave an empty text."""
