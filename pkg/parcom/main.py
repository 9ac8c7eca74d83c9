"""
parcom - Main Entry Point

Parses the command line, loads settings, configures logging and dispatches
to the subcommands. Exit codes: 0 success, 2 usage or input error,
3 internal invariant failure.
"""
import argparse
import logging
import sys
from typing import List, Optional

from .cli import SUBCOMMANDS
from .cli.common import common_parent
from .config.settings import load_settings
from .exceptions import InvariantViolationError, ParcomError

LOG_FORMAT = '%(asctime)s - %(name)s - %(levelname)s - %(message)s'

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_INTERNAL = 3

logger = logging.getLogger(__name__)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="parcom",
        description="Parallel community detection: label propagation, Louvain and ensembles"
    )
    subparsers = parser.add_subparsers(dest="command", required=True)
    parents = [common_parent()]
    for command in SUBCOMMANDS:
        command.add_parser(subparsers, parents)
    return parser


def configure_logging(level: str) -> None:
    logging.basicConfig(
        level=getattr(logging, level.upper(), logging.INFO),
        format=LOG_FORMAT,
        stream=sys.stderr,
        force=True
    )


def main(argv: Optional[List[str]] = None) -> int:
    """Run the command line and return the exit code."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_OK if e.code in (0, None) else EXIT_USAGE

    try:
        settings = load_settings(args.config)
        configure_logging(args.log_level or settings.runtime.log_level)
        return args.handler(args, settings)
    except InvariantViolationError as e:
        logger.error(f"Internal invariant failed: {str(e)}")
        return EXIT_INTERNAL
    except ParcomError as e:
        logger.error(str(e))
        return EXIT_USAGE
    except OSError as e:
        logger.error(f"I/O error: {str(e)}")
        return EXIT_USAGE


def run() -> None:
    """Console script entry."""
    sys.exit(main())


if __name__ == "__main__":
    run()
