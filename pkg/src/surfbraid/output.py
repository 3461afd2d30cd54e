"""Terminal output: coloured diagnostics on stderr, results and JSON on stdout."""

from __future__ import annotations

import json
import logging
import sys
from typing import Any, TextIO

RED = "\033[31m"
GREEN = "\033[32m"
YELLOW = "\033[33m"
CYAN = "\033[36m"
DIM = "\033[2m"
NC = "\033[0m"

JSON_SCHEMA = 1
EXIT_INPUT_ERROR = 2

# Verdict words printed by nf/eq/verify/oracle.
STATUS_COLORS = {
    "pass": GREEN,
    "equal": GREEN,
    "trivial": GREEN,
    "skip": YELLOW,
    "fail": RED,
    "unequal": RED,
    "nontrivial": RED,
}

_logger = logging.getLogger("surfbraid")


def _supports_color(stream: object = None) -> bool:
    """Whether stream (stderr by default) is a terminal."""
    isatty = getattr(sys.stderr if stream is None else stream, "isatty", None)
    return callable(isatty) and bool(isatty())


def _colorize(color: str, text: str, stream: object = None) -> str:
    return f"{color}{text}{NC}" if _supports_color(stream) else text


class ColoredFormatter(logging.Formatter):
    """Red errors, yellow warnings, dim debug lines."""

    def format(self, record: logging.LogRecord) -> str:
        msg = super().format(record)
        if record.levelno >= logging.ERROR:
            color = RED
        elif record.levelno >= logging.WARNING:
            color = YELLOW
        elif record.levelno <= logging.DEBUG:
            color = DIM
        else:
            return msg
        return _colorize(color, msg)


def setup_logging(debug: bool = False) -> None:
    """Send surfbraid log records to stderr, at DEBUG with --debug and WARNING otherwise."""
    level = logging.DEBUG if debug else logging.WARNING
    _logger.setLevel(level)
    if not _logger.handlers:
        handler = logging.StreamHandler(sys.stderr)
        handler.setFormatter(ColoredFormatter("%(message)s"))
        _logger.addHandler(handler)
    for handler in _logger.handlers:
        handler.setLevel(level)


def get_logger() -> logging.Logger:
    return _logger


def debug(msg: str) -> None:
    """Log at DEBUG (visible with --debug)."""
    _logger.debug(msg)


def _stderr(color: str, text: str) -> None:
    print(_colorize(color, text), file=sys.stderr)


def error(msg: str, *, exit_now: bool = True) -> None:
    """Print ``error: msg`` to stderr; exit with the input-error code unless exit_now is False."""
    _stderr(RED, f"error: {msg}")
    if exit_now:
        sys.exit(EXIT_INPUT_ERROR)


def warn(msg: str) -> None:
    _stderr(YELLOW, f"warning: {msg}")


def info(msg: str) -> None:
    _stderr(CYAN, msg)


def success(msg: str) -> None:
    _stderr(GREEN, msg)


def colorize_status(status: str) -> str:
    """Colour a verdict word for stdout; unknown words pass through."""
    color = STATUS_COLORS.get(status.lower().strip())
    return _colorize(color, status, sys.stdout) if color else status


def emit_json(payload: dict[str, Any], stream: TextIO | None = None) -> None:
    """Print a command result as indented JSON, stamped with the schema version."""
    print(json.dumps({"schema": JSON_SCHEMA, **payload}, indent=2), file=stream or sys.stdout)
