"""Exception hierarchy shared by every evaluator."""


class HurwitzParityError(Exception):
    """Base class for all errors raised by this package."""


class DomainError(HurwitzParityError, ValueError):
    """An argument lies outside the domain of the function (or too close to a pole)."""


class PoleError(DomainError):
    pass


class DivergenceError(HurwitzParityError, ValueError):
    """The requested series diverges, e.g. ``(p, x) == (1, 1)``."""


class UnsupportedRangeError(HurwitzParityError, ValueError):
    pass


class SpecError(HurwitzParityError, ValueError):
    """A sum specification or identity point violates a stated hypothesis."""

    def __init__(self, message, condition=None):
        super().__init__(message)
        self.condition = condition


class PrecisionError(HurwitzParityError, ArithmeticError):
    """The target tolerance could not be met within the configured term budget.

    ``achieved`` carries the best error bound that was reached.
    """

    def __init__(self, message, achieved=None):
        super().__init__(message)
        self.achieved = achieved
