"""
Error types shared by the domain modules and the command line
"""

from typing import Optional, Tuple


class CubicTamariError(Exception):
    """Base class for every error raised by the toolkit"""


class InvalidObjectError(CubicTamariError, ValueError):
    """
    A word, relation set or tuple fails a validity condition.

    Attributes:
        condition: short name of the violated condition (e.g. "tamari-(ii)")
        witness: smallest failing index tuple, when one exists
    """

    def __init__(
        self,
        message: str,
        condition: Optional[str] = None,
        witness: Optional[Tuple[int, ...]] = None,
    ):
        super().__init__(message)
        self.condition = condition
        self.witness = witness


class RotationError(InvalidObjectError):
    """Node k is not the left child of node l"""


class SizeMismatchError(CubicTamariError, ValueError):
    """Two objects that must share a size do not"""


class NotComparableError(CubicTamariError, ValueError):
    """A chain was requested between incomparable elements"""


class NotACoverError(CubicTamariError, ValueError):
    """A label was requested for a pair that is not a cover"""


class PreconditionError(CubicTamariError, ValueError):
    """An operation was called outside of its domain"""


class ParseError(CubicTamariError, ValueError):
    """Text or JSON input could not be parsed"""


class CapExceededError(CubicTamariError):
    """A size above the configured cap was requested without override"""


class CacheIntegrityError(CubicTamariError):
    """A cache file failed its checksum or header check"""


class ChainConstructionError(CubicTamariError):
    """The canonical chain construction could not reach its target"""
