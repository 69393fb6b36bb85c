"""
check: run an invariant suite for every size up to n
"""

import argparse

from app.cli.common import emit, enumeration_service
from app.core.config import get_settings
from app.domain.shelling import verify_el_shellability
from app.schemas.schemas import CheckSuiteEnum, ShellingReport, to_json
from app.services.check_service import CheckService
from app.services.enumeration_service import check_cap

NAME = "check"


def register(subparsers, parent: argparse.ArgumentParser) -> None:
    parser = subparsers.add_parser(NAME, parents=[parent], help="Run an acceptance suite")
    parser.add_argument("--suite", choices=[s.value for s in CheckSuiteEnum], default=CheckSuiteEnum.ALL.value)
    parser.add_argument("--n", type=int, required=True)
    parser.add_argument(
        "--certificates",
        default=None,
        metavar="FILE",
        help="Write every increasing chain and its labels at size n to FILE",
    )
    parser.set_defaults(handler=handle)


def handle(args: argparse.Namespace) -> int:
    suite = CheckSuiteEnum(args.suite)
    check_cap(args.n, suite.value, args.cap_override)
    report = CheckService(enumeration_service(args)).run(suite, args.n, args.cap_override)
    emit(to_json(report))

    if args.certificates:
        full = args.n <= get_settings().shelling_cap
        result = verify_el_shellability(args.n, full=full, certificates=True)
        emit(
            to_json(
                ShellingReport(
                    n=result.n,
                    full=result.full,
                    pairs=result.pairs,
                    failures=result.failures,
                    certificates=result.certificates,
                )
            ),
            args.certificates,
        )
    return 0 if report.passed else 1
