"""
QScalar Exceptions

Exception classes for exact scalar and matrix arithmetic over Q(q).
"""


class QScalarError(Exception):
    """Base exception for scalar arithmetic errors."""
    pass


class ScalarDivisionError(QScalarError, ZeroDivisionError):
    """Exception raised when dividing by the zero rational function."""
    pass


class PoleError(QScalarError):
    """Exception raised when evaluating at a root of the denominator."""
    pass


class ZeroPointError(QScalarError):
    """Exception raised when evaluating a Laurent expression at q = 0."""
    pass


class ScalarParseError(QScalarError):
    """Exception raised when a scalar string cannot be parsed."""
    pass


class MatrixShapeError(QScalarError):
    """Exception raised when matrix shapes are incompatible."""
    pass


class SingularMatrixError(QScalarError):
    """Exception raised when inverting a singular matrix."""
    pass
