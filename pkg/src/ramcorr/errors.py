"""Exception types shared across the package."""


class SieveRangeError(ValueError):
    """An argument lies outside the range covered by the sieve table."""


class DomainError(ValueError):
    """An argument violates a mathematical precondition (coprimality,
    squarefreeness, divisibility)."""


class DegreeError(ValueError):
    """A product of log-forms would leave the degree-two span."""


class NumericError(ArithmeticError):
    """A floating-point guard tripped: a quantity that must be an integer
    (or real) came back too far from one."""
