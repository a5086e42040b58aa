"""
Trace and Involution Exceptions

Exception classes for braided traces, quantum traces and involutions.
"""


class TraceInvolutionError(Exception):
    """Base exception for trace and involution errors."""
    pass


class RankDeficiencyError(TraceInvolutionError):
    """Exception raised when the invariant decomposition is not unique."""
    pass


class ConventionError(TraceInvolutionError):
    """Exception raised when no unique quantum trace convention is invariant."""
    pass


class InvolutionPreconditionError(TraceInvolutionError):
    """Exception raised when an involution check is called outside its preconditions."""
    pass


class DegenerateParameterError(TraceInvolutionError):
    """Exception raised at parameter values where the classification degenerates."""
    pass
