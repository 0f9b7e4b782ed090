#!/usr/bin/env python3
"""
================================================================================
ARRANGEMENT MONOIDS - Command-Line Entry Point
================================================================================

Computes incidence lattices and Fan graphs of real line arrangements, builds
their conjugation-free presentations, and checks completeness of those
presentations by subword reversing.

Usage:
    python app.py classify data/arrangements/pencil4.arr
    python app.py check-complete data/arrangements/shared_line.arr
    python app.py word-problem data/arrangements/pencil3.arr "x2 x1 x0" "x0 x2 x1"
    python app.py monoid-explore data/arrangements/pencil3.arr --max-length 4
    python app.py generate random 5 --seed 7

Add --format text to any subcommand for a readable summary.
================================================================================
"""

import sys

from modules.cli.commands import (
    EXIT_INPUT_ERROR,
    ConfigError,
    build_parser,
    config_from_args,
    emit,
    run,
)
from modules.cli.settings import configure_logging, load_settings


def main(argv=None):
    """Parse arguments, run one subcommand and print its report."""
    args = build_parser().parse_args(argv)
    settings = load_settings(args.settings)
    configure_logging(settings, args.log_level)

    try:
        config = config_from_args(args, settings)
    except ConfigError as e:
        print(f"❌ Error: {e}", file=sys.stderr)
        return EXIT_INPUT_ERROR

    result = run(config)
    emit(config, result)
    return result.exit_code


if __name__ == '__main__':
    try:
        sys.exit(main())
    except KeyboardInterrupt:
        print("\n\n⚠️  Cancelled by user", file=sys.stderr)
        sys.exit(EXIT_INPUT_ERROR)
    except Exception as e:
        print(f"\n❌ Unexpected error: {e}", file=sys.stderr)
        sys.exit(EXIT_INPUT_ERROR)
