"""Exception types raised by the library.

Validation failures subclass ValueError so callers that do not care about
the precise failure mode can catch the built-in type.
"""


class SimplexCompletionError(ValueError):
    """Base class for all library-specific errors."""


class OutOfRangeError(SimplexCompletionError):
    """A matrix/tensor position lies outside the declared dimensions."""


class DuplicatePositionError(SimplexCompletionError):
    """The same position was specified twice."""


class NegativeValueError(SimplexCompletionError):
    """A specified entry is negative."""


class DimensionMismatchError(SimplexCompletionError):
    """Operands have incompatible dimensions."""


class NonPositiveEntryError(SimplexCompletionError):
    """An operation requiring strictly positive entries saw a zero."""


class NotBlockCompleteError(SimplexCompletionError):
    """Block contraction was attempted on an incomplete block pattern."""


class InternalInconsistencyError(SimplexCompletionError):
    """Two reconstruction paths disagreed; indicates a bug upstream."""


class NotOnBoundaryError(SimplexCompletionError):
    """Boundary completion requested but the root sum is not exactly one."""


class NotStrictlyInteriorError(SimplexCompletionError):
    """Interior walk requested but the root sum is not strictly below one."""


class NotAFamilyError(SimplexCompletionError):
    """Family sampling requested for a matrix without an infinite family."""


class NoCompletionsError(SimplexCompletionError):
    """Optimization requested over an empty completion set."""


class DidNotConvergeError(SimplexCompletionError):
    """No optimization restart reached the stationarity tolerance."""


class DivisionByZeroMassError(SimplexCompletionError):
    """A factor coordinate carrying positive mass is zero."""


class DegreeCapExceededError(SimplexCompletionError):
    """Requested boundary polynomial exceeds the configured degree cap."""


class UnsupportedPatternError(SimplexCompletionError):
    """A 2x2x2 pattern outside the catalogued orbits was supplied."""


class DegenerateDenominatorError(SimplexCompletionError):
    """The linear completion formula has a vanishing denominator."""


class NotCompletableError(SimplexCompletionError):
    """A completion was requested for a non-completable instance."""
