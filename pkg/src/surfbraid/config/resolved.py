"""Resolved configuration after flag parsing and validation."""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

from surfbraid.presentations import QuotientKind
from surfbraid.words import GroupParams

DEFAULT_K = 3
DEFAULT_N = 3
DEFAULT_G = 1
DEFAULT_SEED = 0
DEFAULT_SAMPLES = 1000


@dataclass
class CliConfig:
    """Everything a subcommand needs; built by cli.resolve_config."""

    command: str
    params: GroupParams

    # Which group: --quotient for nf/eq, --pres / --pres-file for present/oracle
    quotient: QuotientKind | None = None
    pres_file: Path | None = None

    # Randomised checks
    seed: int = DEFAULT_SEED
    samples: int = DEFAULT_SAMPLES
    suite: str = "all"

    json_output: bool = False
    debug: bool = False
