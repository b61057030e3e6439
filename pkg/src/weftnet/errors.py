"""Exception types raised by the engine.

Everything user-facing derives from WeftError so the CLI can catch one base
class and turn it into an error line without swallowing real bugs
(AttributeError, KeyError escaping from internals should crash loudly).
"""

from __future__ import annotations


class WeftError(Exception):
    """Base class for all errors the engine reports to callers."""


class DuplicateNodeError(WeftError):
    pass


class UnknownNodeError(WeftError):
    pass


class TypeMismatchError(WeftError):
    """Attribute value does not match the type fixed at first write."""


class DuplicateLayerError(WeftError):
    pass


class UnknownLayerError(WeftError):
    pass


class WrongLayerModeError(WeftError):
    """A one-mode operation hit a two-mode layer or vice versa."""


class SelfTieForbiddenError(WeftError):
    pass


class DuplicateHyperedgeError(WeftError):
    pass


class UnknownHyperedgeError(WeftError):
    pass


class InboundUnavailableError(WeftError):
    """Inbound adjacency was requested on a layer that does not index it."""


class ProjectionOverflowError(WeftError):
    """Projected pair count would not fit in an unsigned 64-bit integer."""


class NonEmptyLayerError(WeftError):
    """Generators refuse to write into a layer that already has ties."""


class GeneratorParameterError(WeftError):
    """A generator parameter is out of its valid range for the node count."""


class UnsupportedMethodError(WeftError):
    """Named method does not apply to this layer kind (e.g. Or on valued)."""


class FormatError(WeftError):
    """Malformed file content. `line` is 1-based when parsing text formats."""

    def __init__(self, message: str, line: int | None = None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class ScriptSyntaxError(WeftError):
    """Statement could not be parsed. `column` is 1-based."""

    def __init__(self, message: str, column: int | None = None):
        if column is not None:
            message = f"col {column}: {message}"
        super().__init__(message)
        self.column = column


class UnknownCommandError(WeftError):
    pass


class CommandError(WeftError):
    """Bad arguments to a known command (arity, names, literal types)."""
