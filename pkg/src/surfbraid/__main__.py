"""Entry point for python -m surfbraid."""

import sys


def main():
    from surfbraid.cli import main as cli_main

    sys.exit(cli_main())


if __name__ == "__main__":
    main()
