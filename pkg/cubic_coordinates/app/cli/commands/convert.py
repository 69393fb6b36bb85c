"""
convert: move one interval between representations
"""

import argparse
import sys

from app.cli.common import emit
from app.schemas.schemas import RepresentationEnum
from app.services.conversion_service import conversion_service

NAME = "convert"
CHOICES = [r.value for r in RepresentationEnum]


def register(subparsers, parent: argparse.ArgumentParser) -> None:
    parser = subparsers.add_parser(NAME, parents=[parent], help="Convert between tree-pair, interval-poset, tid and cc")
    parser.add_argument("--from", dest="source", choices=CHOICES, required=True)
    parser.add_argument("--to", dest="target", choices=CHOICES, required=True)
    parser.add_argument("--format", choices=["json", "text"], default="json")
    parser.add_argument("input", help="Object to convert, or - to read stdin")
    parser.set_defaults(handler=handle)


def handle(args: argparse.Namespace) -> int:
    text = sys.stdin.read() if args.input == "-" else args.input
    obj = conversion_service.parse(text, RepresentationEnum(args.source))
    converted = conversion_service.convert(obj, RepresentationEnum(args.target))
    emit(conversion_service.render(converted, args.format))
    return 0
