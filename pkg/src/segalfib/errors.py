"""Exception types shared across the engine."""

from __future__ import annotations


class ResourceError(RuntimeError):
    """A dimension or enumeration budget is too small for an exact answer.

    ``budget`` names the binding flag (``max_dim``, ``max_m``, ...) and
    ``required`` the smallest value that would have sufficed, when known.
    """

    def __init__(self, message: str, budget: str = "max_dim", required: int | None = None):
        super().__init__(message)
        self.budget = budget
        self.required = required


class PreconditionError(ValueError):
    """Input rejected before the main computation; ``report`` holds the witness."""

    def __init__(self, message: str, report=None):
        super().__init__(message)
        self.report = report


class ValidationError(ValueError):
    """A structure violates one of its invariants (identities, functoriality, ...)."""


class WorkbenchParseError(ValueError):
    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        loc = ""
        if line is not None:
            loc = f"line {line}"
            if column is not None:
                loc += f", column {column}"
            loc += ": "
        super().__init__(loc + message)
        self.line = line
        self.column = column
