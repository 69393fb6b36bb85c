"""
count: sizes of every enumeration at one n
"""

import argparse

from app.cli.common import emit, enumeration_service
from app.schemas.schemas import to_json
from app.services.enumeration_service import check_cap

NAME = "count"


def register(subparsers, parent: argparse.ArgumentParser) -> None:
    parser = subparsers.add_parser(NAME, parents=[parent], help="Count coordinates, cells, trees and covers")
    parser.add_argument("--n", type=int, required=True, help="Size")
    parser.set_defaults(handler=handle)


def handle(args: argparse.Namespace) -> int:
    check_cap(args.n, NAME, args.cap_override)
    emit(to_json(enumeration_service(args).counts(args.n)))
    return 0
