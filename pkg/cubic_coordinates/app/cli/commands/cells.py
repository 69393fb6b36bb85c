"""
cells: list the cells of CC(n) with their synchronized image
"""

import argparse

import orjson

from app.cli.common import emit, enumeration_service
from app.domain.cells import cell_volume, gamma
from app.schemas.schemas import CellPayload
from app.services.enumeration_service import check_cap

NAME = "cells"


def cell_payload(cell) -> CellPayload:
    return CellPayload(
        c_min=list(cell.c_min.components),
        c_max=list(cell.c_max.components),
        gamma=list(gamma(cell).components),
        volume=cell_volume(cell),
    )


def register(subparsers, parent: argparse.ArgumentParser) -> None:
    parser = subparsers.add_parser(NAME, parents=[parent], help="List cells, their Gamma image and volume")
    parser.add_argument("--n", type=int, required=True)
    parser.add_argument("--format", choices=["json", "text"], default="json")
    parser.set_defaults(handler=handle)


def handle(args: argparse.Namespace) -> int:
    check_cap(args.n, NAME, args.cap_override)
    cells = enumeration_service(args).cells(args.n)
    if args.format == "json":
        data = [cell_payload(cell).model_dump(by_alias=True) for cell in cells]
        emit(orjson.dumps(data, option=orjson.OPT_SORT_KEYS | orjson.OPT_INDENT_2).decode())
    else:
        emit("\n".join(f"{cell} gamma={gamma(cell)}" for cell in cells))
    return 0
