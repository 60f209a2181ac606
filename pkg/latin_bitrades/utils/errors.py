"""
Errors Module

This module defines the exception hierarchy of the toolkit. Every
exception carries the exit code the command-line interface reports
for it.
"""

from typing import Optional


class BitradeError(Exception):
    """Base class for all toolkit errors."""

    exit_code = 1

    def __init__(self, message: str, location: Optional[str] = None):
        """
        Initialize the error.

        Args:
            message: Human readable description
            location: Optional location (file, line, cell) the error refers to
        """
        self.message = message
        self.location = location
        super().__init__(f"{location}: {message}" if location else message)


class ParseError(BitradeError, ValueError):
    """Malformed input text (squares, permutations, groups, tau files)."""

    exit_code = 1


class PreconditionError(BitradeError, ValueError):
    """An operation was called on inputs violating its precondition."""

    exit_code = 2


class GoldenMismatchError(BitradeError):
    """A reproduced example differs from its stored golden output."""

    exit_code = 3


class BudgetExhaustedError(BitradeError):
    """A closure or search exceeded its configured budget."""

    exit_code = 4

    def __init__(self, message: str, partial_size: Optional[int] = None):
        self.partial_size = partial_size
        super().__init__(message)


class ConsistencyError(BitradeError, RuntimeError):
    """An internal invariant failed; indicates a bug or corrupted input."""

    exit_code = 5
