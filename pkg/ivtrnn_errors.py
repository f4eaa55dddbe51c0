"""Exceptions raised across the IVTrNN toolkit.

Every error derives from IvtrnnError (itself a ValueError) so callers can catch
the whole family at once. The CLI maps ParseError and ValidationError to exit
codes 2 and 3; anything else that escapes a command is an internal error.
"""


class IvtrnnError(ValueError):
    """Base class for all toolkit errors."""


# --- Value construction ---
class OutOfOrder(IvtrnnError):
    """Trapezoid abscissae are not ordered a <= b <= c <= d."""


class OutOfRange(IvtrnnError):
    """A component, height or interval endpoint lies outside [0, 1]."""


class DegenerateSupport(IvtrnnError):
    """A triangular membership function has a zero-width side."""


class NotTriangular(IvtrnnError):
    """A triangular-only formula was applied to a trapezoidal number."""


# --- Operations ---
class NonPositiveLambda(IvtrnnError):
    """Scalar multiple or power called with lambda <= 0."""


class UniverseMismatch(IvtrnnError):
    """Two discrete neutrosophic sets are defined over different universes."""


class LengthMismatch(IvtrnnError):
    """Numbers and weights (or criteria and weights) differ in length."""


class InvalidWeights(IvtrnnError):
    """A weight vector violates the constraints of its mode."""


class UnknownTerm(IvtrnnError):
    """A linguistic term is not defined in the scale."""


# --- Problem files ---
class ParseError(IvtrnnError):
    """An input file is unreadable or does not match the expected shape."""


class ValidationError(IvtrnnError):
    """An input file parses but describes an invalid decision problem."""


__all__ = [
    "IvtrnnError",
    "OutOfOrder",
    "OutOfRange",
    "DegenerateSupport",
    "NotTriangular",
    "NonPositiveLambda",
    "UniverseMismatch",
    "LengthMismatch",
    "InvalidWeights",
    "UnknownTerm",
    "ParseError",
    "ValidationError",
]
