"""
Braided Core Exceptions

Exception classes for the tensor square, bracket and generalized Lie checks.
"""


class BraidedCoreError(Exception):
    """Base exception for braided sl(2) errors."""
    pass


class ProjectorError(BraidedCoreError):
    """Exception raised when a tensor-square component is not invariant."""
    pass
