"""Command-line interface for surfbraid."""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from surfbraid import __version__
from surfbraid.config import CliConfig, load_presentation_file
from surfbraid.config.resolved import (
    DEFAULT_G,
    DEFAULT_K,
    DEFAULT_N,
    DEFAULT_SAMPLES,
    DEFAULT_SEED,
)
from surfbraid.exceptions import SurfbraidError, ValidationError
from surfbraid.homs import SUITE_ORDER
from surfbraid.output import debug, error, setup_logging
from surfbraid.presentations import Presentation, QuotientKind, presentation_quotient
from surfbraid.utils import validate_samples, validate_seed
from surfbraid.words import GroupParams

QUOTIENTS = [kind.value for kind in QuotientKind if not kind.is_full]
PRESENTATIONS = [kind.value for kind in QuotientKind]


def _common_flags() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--k", type=int, default=DEFAULT_K, help=f"Inner strands (default {DEFAULT_K})")
    common.add_argument("--n", type=int, default=DEFAULT_N, help=f"Outer strands / punctures (default {DEFAULT_N})")
    common.add_argument("--g", type=int, default=DEFAULT_G, help=f"Genus (default {DEFAULT_G})")
    common.add_argument("--seed", type=int, default=DEFAULT_SEED, help="Seed for randomised checks")
    common.add_argument("--samples", type=int, default=DEFAULT_SAMPLES, help="Samples per randomised check")
    common.add_argument("--json", action="store_true", help="JSON output")
    common.add_argument("--debug", action="store_true", help="Debug mode")
    return common


def build_parser() -> argparse.ArgumentParser:
    """Build argument parser."""
    parser = argparse.ArgumentParser(
        prog="surfbraid",
        description="Lower central series computations for braid groups of surfaces",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
Examples:
  surfbraid nf --quotient gamma3-mixed "b1 a1"          # s^-2 a1 b1
  surfbraid eq "ta1 b1 ta1^-1" "b1 z1"                  # equal (exit 0)
  surfbraid eq --quotient abel-mixed "z1" "1"           # zeta dies in the abelianisation
  surfbraid present --pres mixed --g 0 --json           # relators of B_{3,3}
  surfbraid verify --suite all                          # every suite for (3,3,1)
  surfbraid oracle --pres mixed --invariants abelian    # Z^4 x Z2^2
  surfbraid oracle --pres mixed --trivial "s1 s2^-1"    # trivial (exit 0)
""",
    )
    parser.add_argument("-V", "--version", action="version", version=f"%(prog)s {__version__}")

    common = _common_flags()
    sub = parser.add_subparsers(dest="command", metavar="COMMAND")
    sub.required = True

    nf = sub.add_parser("nf", parents=[common], help="Normal form of a word in a quotient")
    nf.add_argument("word", help='Word, e.g. "s1 a1^-2 z3"')
    nf.add_argument("--quotient", choices=QUOTIENTS, default=QuotientKind.MIXED_GAMMA3.value)

    eq = sub.add_parser("eq", parents=[common], help="Decide equality of two words in a quotient")
    eq.add_argument("word1")
    eq.add_argument("word2")
    eq.add_argument("--quotient", choices=QUOTIENTS, default=QuotientKind.MIXED_GAMMA3.value)

    present = sub.add_parser("present", parents=[common], help="Print a presentation")
    present.add_argument("--pres", choices=PRESENTATIONS, default=QuotientKind.MIXED_FULL.value)

    verify = sub.add_parser("verify", parents=[common], help="Run verification suites")
    verify.add_argument("--suite", choices=("all",) + SUITE_ORDER, default="all")

    oracle = sub.add_parser("oracle", parents=[common], help="Class-2 quotient oracle")
    source = oracle.add_mutually_exclusive_group()
    # no default here; resolve_config falls back to mixed
    source.add_argument("--pres", choices=PRESENTATIONS, help="Presentation (default mixed)")
    source.add_argument("--pres-file", type=Path, metavar="FILE", help="TOML presentation file")
    query = oracle.add_mutually_exclusive_group(required=True)
    query.add_argument("--invariants", choices=("abelian", "gamma2mod3"))
    query.add_argument("--trivial", metavar="WORD", help="Decide whether WORD is trivial mod Gamma_3")

    return parser


def resolve_config(args: argparse.Namespace) -> CliConfig:
    """Validate flags into a CliConfig (parameters are checked before dispatch)."""
    try:
        validate_seed(args.seed)
        validate_samples(args.samples)
    except ValueError as e:
        raise ValidationError(str(e))

    params = GroupParams(args.k, args.n, args.g)
    name = getattr(args, "quotient", None) or getattr(args, "pres", None)
    pres_file = getattr(args, "pres_file", None)
    if name is None and pres_file is None and args.command == "oracle":
        name = QuotientKind.MIXED_FULL.value
    return CliConfig(
        command=args.command,
        params=params,
        quotient=QuotientKind(name) if name else None,
        pres_file=pres_file,
        seed=args.seed,
        samples=args.samples,
        suite=getattr(args, "suite", "all"),
        json_output=args.json,
        debug=args.debug,
    )


def _presentation(config: CliConfig) -> Presentation:
    if config.pres_file is not None:
        return load_presentation_file(config.pres_file)
    assert config.quotient is not None
    return presentation_quotient(config.params, config.quotient)


def main(argv: list[str] | None = None) -> int:
    """Main entry point."""
    try:
        return _main(argv)
    except SurfbraidError as e:
        error(e.message, exit_now=False)
        return e.exit_code
    except KeyboardInterrupt:
        return 130


def _main(argv: list[str] | None = None) -> int:
    """Internal main function that may raise SurfbraidError."""
    parser = build_parser()
    args = parser.parse_args(argv)
    setup_logging(debug=args.debug)

    config = resolve_config(args)
    debug(f"{config.command} {config.params}")

    if config.command == "nf":
        from surfbraid.commands.nf import cmd_nf

        return cmd_nf(args.word, config.params, config.quotient, config.json_output)

    if config.command == "eq":
        from surfbraid.commands.eq import cmd_eq

        return cmd_eq(args.word1, args.word2, config.params, config.quotient, config.json_output)

    if config.command == "present":
        from surfbraid.commands.present import cmd_present

        return cmd_present(config.params, config.quotient, config.json_output)

    if config.command == "verify":
        from surfbraid.commands.verify import cmd_verify

        return cmd_verify(config.suite, config.params, config.seed, config.samples, config.json_output)

    if config.command == "oracle":
        from surfbraid.commands.oracle import cmd_oracle

        return cmd_oracle(_presentation(config), args.invariants, args.trivial, config.json_output)

    parser.print_help()
    return 2


if __name__ == "__main__":
    sys.exit(main())
