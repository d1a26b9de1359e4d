"""
Exception hierarchy.

Every error raised on purpose by the package derives from ``TMTBError``. The
geometric and parameter errors also derive from ``ValueError`` so callers that
only know about the builtin still catch them.
"""

from typing import Optional


class TMTBError(Exception):
    """Base class for all package errors."""


class GeometryError(TMTBError, ValueError):
    """Raised when an input violates a geometric invariant."""


class ParameterError(TMTBError, ValueError):
    """Raised when a numeric parameter is outside its admissible range."""


class SolverError(TMTBError, RuntimeError):
    """Raised when a solver detects a broken invariant or exceeds its step guard."""


class TrajectoryFileError(TMTBError):
    """Raised when a trajectory file cannot be parsed."""

    def __init__(
        self,
        message: str,
        path: Optional[str] = None,
        line: Optional[int] = None,
        column: Optional[int] = None,
        token: Optional[str] = None,
    ):
        self.path = path
        self.line = line
        self.column = column
        self.token = token
        super().__init__(self._render(message))

    def _render(self, message: str) -> str:
        where = []
        if self.path:
            where.append(str(self.path))
        if self.line is not None:
            where.append(f"line {self.line}")
        if self.column is not None:
            where.append(f"column {self.column}")
        prefix = ", ".join(where)
        suffix = f" (token {self.token!r})" if self.token is not None else ""
        return f"{prefix}: {message}{suffix}" if prefix else f"{message}{suffix}"
