"""
Exception hierarchy shared by the model, optics, sweep and CLI layers.

Every error carries the process exit code the CLI reports for it.
"""

from __future__ import annotations


class OptomechError(Exception):
    """Base class for all toolkit errors."""

    exit_code: int = 1

    def __init__(self, message: str, fields: list[str] | None = None):
        super().__init__(message)
        self.message = message
        self.fields = list(fields or [])

    def to_dict(self) -> dict:
        return {
            "error": type(self).__name__,
            "message": self.message,
            "fields": self.fields,
        }


class ParameterDomainError(OptomechError, ValueError):
    """A parameter lies outside its physical domain."""

    exit_code = 1


class SweepValidationError(OptomechError, ValueError):
    """A sweep specification violates one or more field constraints."""

    exit_code = 1


class NumericalDomainError(OptomechError, ArithmeticError):
    """A formula hit a singular point that has no limit convention."""

    exit_code = 2


class SingularIndexError(NumericalDomainError):
    """Re(n_r) = 0, so the 1/n_r term of the drag formula diverges."""


class DegenerateRelationError(NumericalDomainError):
    """M = 1, so the sideband relation divides by zero."""


class OutputError(OptomechError, OSError):
    """An output file could not be read or written."""

    exit_code = 3
