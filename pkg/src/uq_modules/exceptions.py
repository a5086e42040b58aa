"""
U_q(sl(2)) Module Exceptions

Exception classes for spin modules and endomorphism actions.
"""


class UqModuleError(Exception):
    """Base exception for U_q(sl(2)) module errors."""
    pass


class DimensionMismatchError(UqModuleError):
    """Exception raised when an endomorphism does not match the module dimension."""
    pass


class InvalidModuleError(UqModuleError):
    """Exception raised when module parameters are invalid."""
    pass
