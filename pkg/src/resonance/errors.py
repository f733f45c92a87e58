"""Exception hierarchy shared by all modules."""


class ResonanceError(Exception):
    """Base class for all errors raised by this package."""


class DomainError(ResonanceError, ValueError):
    """An argument lies outside the mathematical domain of an operation."""


class OutOfRangeError(DomainError):
    """A query point exceeds the range covered by a precomputed table."""


class ConfigurationError(ResonanceError, ValueError):
    """Inputs are individually valid but mutually inconsistent."""


class ResourceError(ResonanceError, RuntimeError):
    """A computation would exceed its enumeration or memory budget."""


class PrecisionError(ResonanceError, ArithmeticError):
    """A requested accuracy cannot be reached within the evaluation budget."""


class PoleError(DomainError, ZeroDivisionError):
    """Evaluation at a pole."""


class EvaluationError(ResonanceError, ArithmeticError):
    """An integrand or summand produced a non-finite value."""
