"""surfbraid - lower central series of braid groups of surfaces."""

from importlib.metadata import version, PackageNotFoundError

from surfbraid.exceptions import (
    SurfbraidError,
    ConfigError,
    GeneratorError,
    RegimeError,
    ValidationError,
    WordSyntaxError,
)

try:
    __version__ = version("surfbraid")
except PackageNotFoundError:
    __version__ = "0.0.0.dev0"  # Fallback for editable installs without scm

__all__ = [
    "__version__",
    "SurfbraidError",
    "ConfigError",
    "GeneratorError",
    "RegimeError",
    "ValidationError",
    "WordSyntaxError",
]
