"""Error types shared across the engine."""
from __future__ import annotations


class CapExceededError(ValueError):
    """A configured size cap (universe, powerset, open-set count) was exceeded."""


class DocumentError(ValueError):
    """A JSON or CSV input document is malformed.

    Carries optional line/column information for CLI diagnostics.
    """

    def __init__(self, message: str, line: int | None = None, col: int | None = None):
        self.line = line
        self.col = col
        if line is not None and col is not None:
            message = f"{message} (line {line}, column {col})"
        elif line is not None:
            message = f"{message} (line {line})"
        super().__init__(message)
