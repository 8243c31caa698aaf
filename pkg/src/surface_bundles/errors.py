"""Exception hierarchy.

Everything the library raises on bad input derives from BundleError, which
is a ValueError so callers that already guard pydantic validation
(`ValidationError` is a ValueError too) catch both with one clause. The CLI
maps each subclass to its own exit status.
"""
from __future__ import annotations


class BundleError(ValueError):
    """Base class for domain errors."""


class ParseError(BundleError):
    """Text input does not follow one of the file or word syntaxes."""

    def __init__(self, message: str, *, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


class PreconditionError(BundleError):
    """An operation was called outside its domain (bounds, hypotheses, alphabets)."""


class VerificationError(BundleError):
    """A relator identity failed at the requested level.

    `evidence` holds the offending normal form (or matrix) rendered as text.
    """

    def __init__(self, message: str, *, level: str | None = None, evidence: str | None = None):
        self.level = level
        self.evidence = evidence
        super().__init__(message)
