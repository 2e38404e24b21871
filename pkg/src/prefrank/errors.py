"""Exception types shared across the package."""


class PrefrankError(Exception):
    """Base class for package-specific errors."""


class DimensionError(PrefrankError, ValueError):
    """Vector or matrix dimensions do not agree."""


class RankingError(PrefrankError, ValueError):
    """A ranking is not a valid list of distinct in-range document indices."""


class ParseError(PrefrankError, ValueError):
    """A dataset line does not match the expected grammar."""

    def __init__(self, message: str, line_number: int | None = None):
        if line_number is not None:
            message = f"line {line_number}: {message}"
        super().__init__(message)
        self.line_number = line_number


class ValidationError(PrefrankError, ValueError):
    """Parsed or constructed data violates a dataset invariant."""


class FitError(PrefrankError, RuntimeError):
    """The least-squares system for the hidden weights could not be solved."""


class OracleError(PrefrankError, RuntimeError):
    """A feedback oracle failed during an online run."""
