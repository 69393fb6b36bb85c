"""
cache: build, load or clear persisted enumerations
"""

import argparse
import logging

import orjson

from app.cli.common import emit, enumeration_service
from app.core.errors import PreconditionError
from app.schemas.schemas import CacheRepresentationEnum
from app.services.enumeration_service import check_cap

logger = logging.getLogger(__name__)

NAME = "cache"


def register(subparsers, parent: argparse.ArgumentParser) -> None:
    parser = subparsers.add_parser(NAME, parents=[parent], help="Manage the enumeration cache")
    parser.add_argument("action", choices=["build", "load", "clear"])
    parser.add_argument("--n", type=int, default=None)
    parser.add_argument(
        "--repr",
        dest="representation",
        choices=[r.value for r in CacheRepresentationEnum],
        default=None,
        help="Representation (all of them when omitted)",
    )
    parser.set_defaults(handler=handle)


def handle(args: argparse.Namespace) -> int:
    service = enumeration_service(args)
    if args.action == "clear":
        removed = service.cache.clear(args.representation, args.n)
        logger.info(f"Removed {removed} cache files")
        emit(orjson.dumps({"removed": removed}).decode())
        return 0

    if args.n is None:
        raise PreconditionError("--n is required for build and load")
    check_cap(args.n, NAME, args.cap_override)
    representations = [args.representation] if args.representation else [r.value for r in CacheRepresentationEnum]
    counts = {}
    for representation in representations:
        if args.action == "build":
            service.cache.clear(representation, args.n)
        counts[representation] = service.materialize(representation, args.n)
    emit(orjson.dumps({"n": args.n, "counts": counts, "stats": service.cache.stats()}, option=orjson.OPT_SORT_KEYS).decode())
    return 0
