"""
Command registration
"""

from app.cli.commands import cache, cells, check, convert, count, export, volume

COMMANDS = [count, convert, export, check, cells, volume, cache]

__all__ = ["COMMANDS"]
