"""
Cubic Coordinates Toolkit - Command Line Application

Builds the argparse application, registers every command module and maps
toolkit errors to exit statuses (0 success, 1 failed check, 2 error).
Errors go to stderr as one ErrorResponse JSON line.
"""

import argparse
import logging
import sys
from typing import List, Optional

from app.cli.commands import COMMANDS
from app.cli.common import common_options
from app.core.config import get_settings
from app.core.errors import CubicTamariError
from app.core.logging import configure_logging
from app.schemas.schemas import ErrorResponse, to_json

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_ERROR = 2


def build_parser() -> argparse.ArgumentParser:
    settings = get_settings()
    parser = argparse.ArgumentParser(
        prog="cubic",
        description=f"{settings.app_name} {settings.app_version}",
    )
    subparsers = parser.add_subparsers(dest="command", required=True)
    parent = common_options()
    for command in COMMANDS:
        command.register(subparsers, parent)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    """Parse arguments, run one command and return its exit status"""
    settings = get_settings()
    parser = build_parser()
    args = parser.parse_args(argv)

    default_level = "DEBUG" if settings.debug else settings.log_level
    configure_logging(args.log_level or default_level, settings.log_file)
    logger.info(f"Running {args.command}")

    try:
        status = args.handler(args)
    except CubicTamariError as exc:
        error = ErrorResponse(
            error_code=type(exc).__name__,
            message=str(exc),
            condition=getattr(exc, "condition", None),
            witness=getattr(exc, "witness", None),
        )
        sys.stderr.write(to_json(error, indent=False) + "\n")
        logger.debug(f"{args.command} failed", exc_info=True)
        return EXIT_ERROR

    logger.info(f"Finished {args.command} with status {status}")
    return status
