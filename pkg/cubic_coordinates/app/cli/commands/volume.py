"""
volume: per-cell volumes and their total
"""

import argparse

from app.cli.commands.cells import cell_payload
from app.cli.common import emit, enumeration_service
from app.schemas.schemas import VolumeReport, to_json
from app.services.enumeration_service import check_cap

NAME = "volume"


def register(subparsers, parent: argparse.ArgumentParser) -> None:
    parser = subparsers.add_parser(NAME, parents=[parent], help="Report cell volumes")
    parser.add_argument("--n", type=int, required=True)
    parser.add_argument("--format", choices=["json", "text"], default="text")
    parser.set_defaults(handler=handle)


def handle(args: argparse.Namespace) -> int:
    check_cap(args.n, NAME, args.cap_override)
    payloads = [cell_payload(cell) for cell in enumeration_service(args).cells(args.n)]
    report = VolumeReport(n=args.n, cells=payloads, total=sum(p.volume for p in payloads))
    if args.format == "json":
        emit(to_json(report))
        return 0
    lines = [
        "(" + ",".join(map(str, p.c_min)) + ") (" + ",".join(map(str, p.c_max)) + f") {p.volume}"
        for p in payloads
    ]
    lines.append(f"total {report.total}")
    emit("\n".join(lines))
    return 0
