"""Exception types raised across the package."""


class UltranormError(Exception):
    """Base class for all errors raised by ultranorm."""


class FieldMismatchError(UltranormError, ValueError):
    """Operands live over different valued fields."""


class DimensionMismatchError(UltranormError, ValueError):
    """Vectors, matrices or norms have incompatible dimensions."""


class SingularMatrixError(UltranormError, ValueError):
    """A matrix that must be invertible (or of full column rank) is not."""


class TrivialValuationError(UltranormError, ValueError):
    """The operation needs a nontrivially valued field."""


class ContainmentError(UltranormError, ValueError):
    """The inner lattice is not contained in the outer one."""


class NotConcaveError(UltranormError, ValueError):
    """A toric metric was expected to be its own concave envelope."""


class GeometryError(UltranormError, ValueError):
    """Degenerate or unsupported polytope data."""
