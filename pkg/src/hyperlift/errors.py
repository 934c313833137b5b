"""Exception taxonomy.

ValidationError subclasses map to CLI exit code 2 (bad input),
NumericalError subclasses to exit code 3 (data is structurally fine but
fails a numerical contract). Errors carry the offending parameter value
or location whenever one exists.
"""

from __future__ import annotations


class HyperliftError(Exception):
    pass


class ValidationError(HyperliftError):
    pass


class InvalidInputError(ValidationError):
    pass


class SchemaError(ValidationError):
    pass


class DomainError(ValidationError):
    pass


class InsufficientResolutionError(ValidationError):
    pass


class NumericalError(HyperliftError):
    def __init__(self, message: str, location=None):
        super().__init__(message if location is None else f"{message} (at {location})")
        self.location = location


class NotHyperbolicError(NumericalError):
    def __init__(self, message: str, location=None, witness: float | None = None):
        super().__init__(message, location)
        self.witness = witness


class NotNonnegativeError(NumericalError):
    pass


class NotInOrbitSpaceError(NumericalError):
    pass


class CannotReduceAtZeroError(NumericalError):
    pass


class IncompatibleLiftsError(NumericalError):
    pass
