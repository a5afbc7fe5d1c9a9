"""Exception hierarchy shared by the algebra, series and matrix layers."""


class AlgebraError(Exception):
    """Base class for every error raised by :mod:`bchseries`."""


class UsageError(AlgebraError, ValueError):
    """Operands are incompatible (mismatched truncation orders, sizes, bad parameters)."""


class DegreeRangeError(AlgebraError, IndexError):
    """A requested homogeneous degree lies outside ``0..order``."""


class DomainError(AlgebraError, ValueError):
    """A series was applied to an argument violating its constant-term constraint."""

    def __init__(self, constraint, message):
        super().__init__(f"{constraint}: {message}")
        self.constraint = constraint


class StructureError(AlgebraError, ValueError):
    """A matrix is not upper-triangular, graded or Toeplitz-constant."""
