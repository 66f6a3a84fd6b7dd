class ParameterError(ValueError):
    """Raised when arguments violate an operation's preconditions."""


class BudgetError(RuntimeError):
    """Raised when an exact computation would exceed its work budget.

    ``spent`` records how much work was done before giving up, so callers can
    report partial progress.
    """

    def __init__(self, message, spent=0):
        super().__init__(message)
        self.spent = spent


class DomainWarning(UserWarning):
    """Emitted when a closed-form optimum had to be clamped into its domain."""
