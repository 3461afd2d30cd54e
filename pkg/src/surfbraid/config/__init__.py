"""Configuration: resolved command-line settings and presentation files."""

from surfbraid.config.presentation_file import load_presentation_file
from surfbraid.config.resolved import CliConfig

__all__ = ["CliConfig", "load_presentation_file"]
