"""
Options and helpers shared by every command
"""

import argparse
import sys
from pathlib import Path
from typing import Optional

from app.core.cache import get_cache
from app.services.enumeration_service import EnumerationService


def common_options() -> argparse.ArgumentParser:
    """Parent parser holding the global flags"""
    parent = argparse.ArgumentParser(add_help=False)
    parent.add_argument("--cache-dir", default=None, help="Enumeration cache directory (overrides CACHE_DIR)")
    parent.add_argument("--cap-override", action="store_true", help="Allow sizes above the configured cap")
    parent.add_argument("--log-level", default=None, help="Log level (overrides LOG_LEVEL)")
    return parent


def enumeration_service(args: argparse.Namespace) -> EnumerationService:
    return EnumerationService(get_cache(args.cache_dir))


def emit(text: str, output: Optional[str] = None) -> None:
    """Write to a file when one is given, otherwise to stdout"""
    if output:
        path = Path(output)
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(text)
        return
    sys.stdout.write(text if text.endswith("\n") else text + "\n")
