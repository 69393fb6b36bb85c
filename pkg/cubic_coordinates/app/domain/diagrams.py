"""
Tamari diagrams, dual Tamari diagrams and Tamari interval diagrams

A Tamari diagram u of size n is a word with 0 <= u_i <= n - i and
u_{i+j} <= u_i - j for every j in [0, u_i]. The dual conditions mirror these
from the right. A compatible pair (u, v) is a Tamari interval diagram (TID).
Indices in witnesses and messages are 1-based, as in the usual notation.
"""

import logging
import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Optional, Sequence, Tuple

from app.core.errors import InvalidObjectError, ParseError, PreconditionError, SizeMismatchError

logger = logging.getLogger(__name__)

Word = Tuple[int, ...]
Violation = Tuple[str, Tuple[int, ...]]


def _as_word(letters: Iterable[int]) -> Word:
    word = tuple(letters)
    for letter in word:
        if isinstance(letter, bool) or not isinstance(letter, int):
            raise ParseError(f"Diagram letters must be integers, got {letter!r}")
    return word


def tamari_violation(word: Sequence[int]) -> Optional[Violation]:
    """Return the violated Tamari-diagram condition with the smallest witness, or None"""
    n = len(word)
    for i, letter in enumerate(word, start=1):
        if not 0 <= letter <= n - i:
            return "tamari-(i)", (i,)
        for j in range(1, letter + 1):
            if word[i + j - 1] > letter - j:
                return "tamari-(ii)", (i, j)
    return None


def dual_tamari_violation(word: Sequence[int]) -> Optional[Violation]:
    """Return the violated dual-Tamari-diagram condition with the smallest witness, or None"""
    for i, letter in enumerate(word, start=1):
        if not 0 <= letter <= i - 1:
            return "dual-(i)", (i,)
        for j in range(1, letter + 1):
            if word[i - j - 1] > letter - j:
                return "dual-(ii)", (i, j)
    return None


def compatibility_violation(u: Sequence[int], v: Sequence[int]) -> Optional[Violation]:
    """Return the smallest (i, j) with u_i >= j - i and v_j >= j - i, or None"""
    n = len(u)
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            gap = j - i
            if u[i - 1] >= gap and v[j - 1] >= gap:
                return "compatibility", (i, j)
    return None


def _raise_for(violation: Violation, kind: str, word: Sequence[int]) -> None:
    condition, witness = violation
    raise InvalidObjectError(
        f"{kind} {list(word)} violates {condition} at {witness}",
        condition=condition,
        witness=witness,
    )


@dataclass(frozen=True, order=True)
class TamariDiagram:
    """Word u; u_i is the size of the right subtree of node i"""

    word: Word

    def __post_init__(self):
        object.__setattr__(self, "word", _as_word(self.word))
        violation = tamari_violation(self.word)
        if violation:
            _raise_for(violation, "Tamari diagram", self.word)

    @property
    def size(self) -> int:
        return len(self.word)

    def __str__(self) -> str:
        return ",".join(str(letter) for letter in self.word)


@dataclass(frozen=True, order=True)
class DualTamariDiagram:
    """Word v; v_i is the size of the left subtree of node i"""

    word: Word

    def __post_init__(self):
        object.__setattr__(self, "word", _as_word(self.word))
        violation = dual_tamari_violation(self.word)
        if violation:
            _raise_for(violation, "Dual Tamari diagram", self.word)

    @property
    def size(self) -> int:
        return len(self.word)

    def __str__(self) -> str:
        return ",".join(str(letter) for letter in self.word)


@dataclass(frozen=True, order=True)
class TamariIntervalDiagram:
    """Compatible pair (u, v) of the same size"""

    u: TamariDiagram
    v: DualTamariDiagram

    def __post_init__(self):
        if self.u.size != self.v.size:
            raise SizeMismatchError(
                f"Diagrams of sizes {self.u.size} and {self.v.size} cannot form a pair"
            )
        violation = compatibility_violation(self.u.word, self.v.word)
        if violation:
            condition, witness = violation
            raise InvalidObjectError(
                f"({self.u}) and ({self.v}) are incompatible at {witness}",
                condition=condition,
                witness=witness,
            )

    @classmethod
    def from_words(cls, u: Sequence[int], v: Sequence[int]) -> "TamariIntervalDiagram":
        return cls(TamariDiagram(tuple(u)), DualTamariDiagram(tuple(v)))

    @property
    def size(self) -> int:
        return self.u.size

    def to_text(self) -> str:
        return f"{self.u} {self.v}"


def validate_tamari_diagram(word: Sequence[int]) -> TamariDiagram:
    """Validate a word as a Tamari diagram (raises InvalidObjectError)"""
    return TamariDiagram(tuple(word))


def validate_dual_tamari_diagram(word: Sequence[int]) -> DualTamariDiagram:
    """Validate a word as a dual Tamari diagram (raises InvalidObjectError)"""
    return DualTamariDiagram(tuple(word))


def _word_of(diagram) -> Word:
    return diagram.word if hasattr(diagram, "word") else tuple(diagram)


def compatible(u, v) -> bool:
    """
    Check the compatibility condition between u and v.

    Args:
        u: TamariDiagram or word
        v: DualTamariDiagram or word

    Returns:
        True iff u_i >= j - i implies v_j < j - i for all i < j
    """
    u_word, v_word = _word_of(u), _word_of(v)
    if len(u_word) != len(v_word):
        raise SizeMismatchError(f"Lengths differ: {len(u_word)} != {len(v_word)}")
    return compatibility_violation(u_word, v_word) is None


def is_synchronized(d: TamariIntervalDiagram) -> bool:
    """True iff u_i != 0 or v_{i+1} != 0 for every i in [n-1]"""
    u, v = d.u.word, d.v.word
    return all(u[i] != 0 or v[i + 1] != 0 for i in range(d.size - 1))


def is_new(d: TamariIntervalDiagram) -> bool:
    """
    Check the three conditions of a new Tamari interval diagram.

    (i) u_i <= n - i - 1 for i in [n-1]; (ii) v_j <= j - 2 for j in [2, n];
    (iii) u_k < l - k - 1 or v_l < l - k - 1 whenever k + 1 < l.
    """
    n = d.size
    if n < 3:
        raise PreconditionError(f"Newness is defined for sizes >= 3, got {n}")
    u, v = d.u.word, d.v.word
    if any(u[i - 1] > n - i - 1 for i in range(1, n)):
        return False
    if any(v[j - 1] > j - 2 for j in range(2, n + 1)):
        return False
    for k in range(1, n + 1):
        for l in range(k + 2, n + 1):
            bound = l - k - 1
            if u[k - 1] >= bound and v[l - 1] >= bound:
                return False
    return True


@lru_cache(maxsize=None)
def enumerate_tid(n: int) -> Tuple[TamariIntervalDiagram, ...]:
    """
    All Tamari interval diagrams of size n, sorted by (u, v).

    u and v candidates come from the tree enumeration; pairs are kept when
    compatible.
    """
    from app.domain.trees import enumerate_trees, to_dual_tamari_diagram, to_tamari_diagram

    if n < 0:
        raise PreconditionError(f"Size must be non-negative, got {n}")
    trees = enumerate_trees(n)
    us = sorted(to_tamari_diagram(t) for t in trees)
    vs = sorted(to_dual_tamari_diagram(t) for t in trees)
    result = tuple(
        TamariIntervalDiagram(u, v)
        for u in us
        for v in vs
        if compatibility_violation(u.word, v.word) is None
    )
    logger.debug(f"Enumerated {len(result)} Tamari interval diagrams of size {n}")
    return result


def chapoton_count(n: int) -> int:
    """Number of Tamari intervals of size n: 2(4n+1)! / ((n+1)!(3n+2)!)"""
    if n < 0:
        raise PreconditionError(f"Size must be non-negative, got {n}")
    numerator = 2 * math.factorial(4 * n + 1)
    denominator = math.factorial(n + 1) * math.factorial(3 * n + 2)
    return numerator // denominator


def parse_word(text: str) -> Word:
    """Parse a comma-joined integer list such as '9,0,2,1'"""
    text = text.strip()
    if not text:
        return ()
    try:
        return tuple(int(part) for part in text.split(","))
    except ValueError as exc:
        raise ParseError(f"Cannot parse word {text!r}: {exc}") from exc


def parse_tid_text(text: str) -> TamariIntervalDiagram:
    """Parse the text form '<u> <v>' with comma-joined letters"""
    parts = text.split()
    if len(parts) != 2:
        raise ParseError(f"Expected two space-separated words, got {text!r}")
    return TamariIntervalDiagram.from_words(parse_word(parts[0]), parse_word(parts[1]))
