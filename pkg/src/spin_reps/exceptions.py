"""
Spin Representation Exceptions

Exception classes for the spin-k almost representations.
"""


class SpinRepError(Exception):
    """Base exception for spin representation errors."""
    pass


class ThetaMismatchError(SpinRepError):
    """Exception raised when the three relations do not share one factor."""
    pass


class NonScalarCasimirError(SpinRepError):
    """Exception raised when the braided Casimir image is not a scalar matrix."""
    pass


class RepParameterError(SpinRepError):
    """Exception raised for invalid l or h."""
    pass
