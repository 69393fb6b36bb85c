"""
export: write the cubic realization as JSON or DOT
"""

import argparse

from app.cli.common import emit, enumeration_service
from app.services.enumeration_service import check_cap
from app.services.export_service import EXPORT_FORMATS, ExportService

NAME = "export"


def register(subparsers, parent: argparse.ArgumentParser) -> None:
    parser = subparsers.add_parser(NAME, parents=[parent], help="Export the cover graph of CC(n)")
    parser.add_argument("--n", type=int, required=True)
    parser.add_argument("--format", choices=EXPORT_FORMATS, default="json")
    parser.add_argument("--output", default=None, help="Destination file (stdout when omitted)")
    parser.set_defaults(handler=handle)


def handle(args: argparse.Namespace) -> int:
    check_cap(args.n, NAME, args.cap_override)
    service = ExportService(enumeration_service(args))
    emit(service.export(args.n, args.format), args.output)
    return 0
