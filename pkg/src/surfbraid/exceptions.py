"""Exception hierarchy for surfbraid."""

from __future__ import annotations


class SurfbraidError(Exception):
    """Base exception for all surfbraid errors.

    Attributes:
        message: Human-readable error message
        exit_code: Suggested exit code for CLI (default 2, input error)
    """

    def __init__(self, message: str, exit_code: int = 2):
        self.message = message
        self.exit_code = exit_code
        super().__init__(message)


class WordSyntaxError(SurfbraidError):
    """Word text that does not follow the word grammar.

    Attributes:
        position: 0-based column of the offending token
    """

    def __init__(self, message: str, position: int, exit_code: int = 2):
        self.position = position
        super().__init__(f"{message} (at column {position})", exit_code)


class GeneratorError(SurfbraidError):
    """Unknown generator, index out of range, or letter outside an alphabet."""

    pass


class RegimeError(SurfbraidError):
    """Operation called outside the parameter regime where it is proved."""

    pass


class ValidationError(SurfbraidError):
    """Input validation errors (parameters, sample counts, element shapes)."""

    pass


class ConfigError(SurfbraidError):
    """Presentation file errors (missing file, bad TOML, bad fields)."""

    pass
