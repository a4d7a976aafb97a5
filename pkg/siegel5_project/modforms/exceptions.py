"""
Custom exceptions for the Siegel modular forms toolkit.
"""


class ToolkitError(Exception):
    """Base exception for toolkit errors."""
    pass


class WeightMismatchError(ToolkitError):
    """Exception raised when modular weights of operands disagree."""
    pass


class PrecisionError(ToolkitError):
    """Exception raised for queries or data beyond the known truncation."""
    pass


class SupportConeError(ToolkitError):
    """Exception raised for a coefficient outside b^2 <= 4ac."""
    pass


class DataIntegrityError(ToolkitError):
    """Exception raised for malformed or conflicting data files."""
    pass


class ValidationError(ToolkitError):
    """Exception raised for invalid arguments."""
    pass


class UnsupportedWeightError(ToolkitError):
    """Exception raised for weights outside the dimension formula's range."""
    pass


class IdentityFailure(ToolkitError):
    """Exception raised when a checked identity does not hold."""

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness
