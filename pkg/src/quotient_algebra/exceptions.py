"""
Quotient Algebra Exceptions

Exception classes for normal-form arithmetic in A_{h,q} and A_{h,q}^c.
"""


class QuotientAlgebraError(Exception):
    """Base exception for quotient algebra errors."""
    pass


class RuleDerivationError(QuotientAlgebraError):
    """Exception raised when the uw-elimination rule cannot be derived or validated."""
    pass


class WellDefinednessError(QuotientAlgebraError):
    """Exception raised when an operation is not compatible with the defining relations."""
    pass


class SerializationError(QuotientAlgebraError):
    """Exception raised when a normal form cannot be parsed from JSON."""
    pass
