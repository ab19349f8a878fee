"""Error hierarchy.

Everything raised on purpose derives from LeavittError; the CLI maps the
subclasses onto its exit codes (syntax 2, semantic input 3, internal
contradiction 4).
"""

from __future__ import annotations


class LeavittError(Exception):
    pass


class GraphFormatError(LeavittError):
    """Malformed graph or hom-spec document."""


class PathError(LeavittError):
    """Edge sequence that is not a path, or a range/source mismatch."""


class CoefficientError(LeavittError):
    """Scalar outside the active coefficient ring."""


class MismatchError(LeavittError):
    """Operation across elements bound to different graphs or rings."""


class ExpressionError(LeavittError):
    """Syntax error in an expression or literal; carries a position."""

    def __init__(self, message: str, position: int | None = None):
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)
        self.position = position


class UnknownSymbolError(LeavittError):
    """Identifier that names no vertex or edge of the active graph."""


class PreconditionError(LeavittError):
    """Operation invoked outside its stated preconditions."""


class GroupoidError(LeavittError):
    """No witness exists for a requested groupoid element."""


class NotComposableError(GroupoidError):
    """Composition attempted on a non-composable pair."""


class TheoremViolationError(LeavittError):
    """Internal contradiction: a proved statement failed on a concrete
    instance, which signals an arithmetic bug in the engine."""
