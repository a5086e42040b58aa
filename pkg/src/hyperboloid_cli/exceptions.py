"""
Hyperboloid CLI Exceptions

Exception classes for command-line argument and run configuration errors.
"""


class CliError(Exception):
    """Base exception for command-line errors."""
    pass


class ParameterError(CliError):
    """Exception raised when a command receives invalid parameters (exit code 2)."""
    pass
