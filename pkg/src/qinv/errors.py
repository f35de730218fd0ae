"""Domain errors.  The CLI maps any QinvError to exit code 1."""


class QinvError(ValueError):
    """Base class for structured domain errors."""


class DegenerateSpecializationError(QinvError):
    """Raised when q = q^-1 after specialization, so [n] is ill-defined."""


class TruncationError(QinvError):
    """No quantum integer vanishes at the requested root of unity."""


class ExactDivisionError(QinvError):
    """A division that must be exact left a remainder (internal inconsistency)."""


class DiagramError(QinvError):
    """A sliced diagram failed validation."""


class GroupTableError(QinvError):
    """A multiplication table is not a group."""


class DimensionCapError(QinvError):
    """A tensor-product dimension exceeded the configured cap."""
