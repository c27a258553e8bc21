"""
Command-line entry point: argument parsing, logging setup and exit codes
"""

import argparse
import logging
import sys

from pydantic import ValidationError

from mdst_engine import __version__
from mdst_engine.adapters.cli.commands import register_commands
from mdst_engine.adapters.cli.utils import (
    EXIT_FLAGS,
    EXIT_INPUT,
    EXIT_REJECTED,
    InputError,
)
from mdst_engine.config.settings import settings
from mdst_engine.core.errors import (
    CertificateError,
    GraphFormatError,
    OracleError,
    TreeError,
)

logger = logging.getLogger(__name__)


class UsageError(Exception):
    """Bad command-line flags (exit code 3)"""


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # type: ignore[override]
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="mdst",
        description="Approximate minimum-degree spanning trees with lower-bound certificates",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("--verbose", "-v", action="store_true", help="Debug logging")
    subparsers = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    register_commands(subparsers)
    return parser


def configure_logging(verbose: bool = False) -> None:
    """Log to stderr so stdout stays machine-readable"""
    level = (
        logging.DEBUG
        if verbose or settings.debug
        else getattr(logging, settings.log_level.upper(), logging.INFO)
    )
    logging.basicConfig(
        level=level,
        format="%(asctime)s - %(name)s - %(levelname)s - %(message)s",
        stream=sys.stderr,
        force=True,
    )


def run(argv: list[str] | None = None) -> int:
    """Parse `argv`, run the command and map failures to exit codes"""
    try:
        args = build_parser().parse_args(argv)
    except UsageError as e:
        print(f"mdst: error: {e}", file=sys.stderr)
        return EXIT_FLAGS
    configure_logging(args.verbose)

    try:
        return int(args.handler(args))
    except ValidationError as e:
        logger.error(f"invalid flags: {e}")
        return EXIT_FLAGS
    except OracleError as e:
        logger.error(f"{type(e).__name__}: {e}")
        return EXIT_FLAGS
    except (GraphFormatError, InputError) as e:
        logger.error(f"{type(e).__name__}: {e}")
        return EXIT_INPUT
    except (CertificateError, TreeError) as e:
        logger.error(f"{type(e).__name__}: {e}")
        return EXIT_REJECTED
    except KeyboardInterrupt:
        logger.info("🛑 interrupted")
        return EXIT_REJECTED
    except Exception as e:
        logger.exception(f"❌ unexpected error: {e}")
        return EXIT_REJECTED


def main() -> None:
    sys.exit(run())
