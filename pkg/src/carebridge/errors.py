"""Shared exception types.

Every error that crosses a module boundary derives from CarebridgeError so
the service layer can map it onto a stable error code.
"""

from __future__ import annotations


class CarebridgeError(Exception):
    """Base class; `code` is the stable identifier exposed by the API."""

    code = "internal"


class ParseError(CarebridgeError):
    """Malformed input document; carries the 1-based line number."""

    code = "parse_error"

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


class DuplicateError(CarebridgeError):
    code = "duplicate"


class NotFoundError(CarebridgeError):
    code = "not_found"


class ValidationError(CarebridgeError):
    code = "validation"


class StateError(CarebridgeError):
    """Operation not legal in the object's current state."""

    code = "invalid_state"


class AccessDeniedError(CarebridgeError):
    code = "access_denied"


class ConfigError(CarebridgeError):
    code = "config"
