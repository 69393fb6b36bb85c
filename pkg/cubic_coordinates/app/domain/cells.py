"""
Cells of the cubic realization

A minimal-cellular coordinate has n - 1 upper covers. Raising it with the
minimal increases from right to left yields its maximal-cellular partner and
the pair spans a cell. Cells are in bijection with synchronized coordinates.
"""

import itertools
import logging
import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, List, Optional, Tuple

from app.core.errors import InvalidObjectError, PreconditionError, SizeMismatchError
from app.domain.cubic import (
    CubicCoordinate,
    covers,
    enumerate_cc,
    is_cubic_coordinate,
    is_synchronized_cc,
    min_increase,
)

logger = logging.getLogger(__name__)

Signs = Tuple[int, ...]


def is_minimal_cellular(c: CubicCoordinate) -> bool:
    return len(covers(c)) == c.size - 1


def maximal_cellular(c: CubicCoordinate) -> CubicCoordinate:
    """Apply the minimal increase at n-1, n-2, ..., 1 in turn"""
    if not is_minimal_cellular(c):
        raise PreconditionError(f"{c} is not minimal-cellular")
    current = c
    for i in range(len(c), 0, -1):
        raised = min_increase(current, i)
        if raised is None:
            raise PreconditionError(f"Component {i} of {current} cannot increase")
        current = raised
    return current


@dataclass(frozen=True, order=True)
class Cell:
    """Minimal-cellular coordinate and its maximal-cellular partner"""

    c_min: CubicCoordinate
    c_max: CubicCoordinate

    def __post_init__(self):
        if self.c_min.size != self.c_max.size:
            raise SizeMismatchError("Cell endpoints differ in size")
        if maximal_cellular(self.c_min) != self.c_max:
            raise InvalidObjectError(
                f"{self.c_max} is not the maximal-cellular of {self.c_min}",
                condition="cell",
            )

    @classmethod
    def from_minimal(cls, c: CubicCoordinate) -> "Cell":
        return cls(c, maximal_cellular(c))

    @property
    def size(self) -> int:
        return self.c_min.size

    def __str__(self) -> str:
        return f"<{self.c_min},{self.c_max}>"


def cell_vertices(cell: Cell) -> List[CubicCoordinate]:
    """The 2^(n-1) coordinates picking each component from either endpoint"""
    choices = zip(cell.c_min.components, cell.c_max.components)
    return sorted(CubicCoordinate(vertex) for vertex in itertools.product(*choices))


def interior_is_empty(cell: Cell) -> bool:
    """No coordinate lies strictly between the endpoints in every component"""
    if cell.size == 1:
        return True
    for c in enumerate_cc(cell.size):
        if all(lo < x < hi for lo, x, hi in zip(cell.c_min.components, c.components, cell.c_max.components)):
            return False
    return True


def gamma(cell: Cell) -> CubicCoordinate:
    """c_min on negative components, c_max elsewhere"""
    return CubicCoordinate(
        tuple(lo if lo < 0 else hi for lo, hi in zip(cell.c_min.components, cell.c_max.components))
    )


def gamma_bar(cell: Cell) -> CubicCoordinate:
    """The vertex opposite to gamma(cell)"""
    return CubicCoordinate(
        tuple(hi if lo < 0 else lo for lo, hi in zip(cell.c_min.components, cell.c_max.components))
    )


def _require_synchronized(c: CubicCoordinate) -> None:
    if not is_synchronized_cc(c):
        raise PreconditionError(f"{c} is not synchronized")


def gamma_inv(c: CubicCoordinate) -> Cell:
    """
    Cell sent to the synchronized coordinate c.

    Negative components of c are the cell's minimum there; positive ones are
    its maximum, so only the minimum's non-negative entries are searched.
    """
    _require_synchronized(c)
    ranges = [(x,) if x < 0 else range(0, x) for x in c.components]
    for candidate in itertools.product(*ranges):
        if not is_cubic_coordinate(candidate):
            continue
        low = CubicCoordinate(candidate)
        if not is_minimal_cellular(low):
            continue
        cell = Cell.from_minimal(low)
        if gamma(cell) == c:
            return cell

    logger.warning(f"Constrained search missed {c}, scanning all cells")
    for cell in enumerate_cells(c.size):
        if gamma(cell) == c:
            return cell
    raise InvalidObjectError(f"No cell maps to {c}", condition="gamma")


def opposite(c: CubicCoordinate) -> CubicCoordinate:
    return gamma_bar(gamma_inv(c))


# ============================================
# Volumes
# ============================================

def cell_volume(cell: Cell) -> int:
    return math.prod(hi - lo for lo, hi in zip(cell.c_min.components, cell.c_max.components))


def extended_sync_volume(c: CubicCoordinate) -> int:
    """Product of the absolute values of the components"""
    _require_synchronized(c)
    return math.prod(abs(x) for x in c.components)


def sync_leq(c2: CubicCoordinate, c: CubicCoordinate) -> bool:
    """Same sign everywhere and |c2_i| <= |c_i|"""
    _require_synchronized(c2)
    _require_synchronized(c)
    if c.size != c2.size:
        raise SizeMismatchError(f"Coordinates of sizes {c2.size} and {c.size}")
    return all(
        (a < 0) == (b < 0) and abs(a) <= abs(b)
        for a, b in zip(c2.components, c.components)
    )


def sync_predecessors(c: CubicCoordinate) -> List[CubicCoordinate]:
    """Valid synchronized coordinates strictly below c for sync_leq"""
    ranges = [
        [m if x > 0 else -m for m in range(1, abs(x) + 1)]
        for x in c.components
    ]
    return [
        CubicCoordinate(candidate)
        for candidate in itertools.product(*ranges)
        if candidate != c.components and is_cubic_coordinate(candidate)
    ]


@lru_cache(maxsize=None)
def sync_volume(c: CubicCoordinate) -> int:
    """Extended volume minus the volumes of every strict predecessor"""
    _require_synchronized(c)
    return extended_sync_volume(c) - sum(sync_volume(p) for p in sync_predecessors(c))


# ============================================
# Hypercubes and regions
# ============================================

def origin(n: int) -> CubicCoordinate:
    return CubicCoordinate((0,) * (n - 1))


def in_hypercube(x: CubicCoordinate, c: CubicCoordinate) -> bool:
    """x lies in the box spanned by the origin and c"""
    return all(min(0, b) <= a <= max(0, b) for a, b in zip(x.components, c.components))


def hypercube_decomposes(c: CubicCoordinate) -> bool:
    """
    Every unit cube of the box spanned by the origin and the synchronized c
    lies in exactly one cell gamma_inv(c2) with c2 below c for sync_leq.
    """
    _require_synchronized(c)
    cells = [gamma_inv(p) for p in sync_predecessors(c) + [c]]
    for cell in cells:
        if not (in_hypercube(cell.c_min, c) and in_hypercube(cell.c_max, c)):
            return False
    corners = itertools.product(*[range(min(0, x), max(0, x)) for x in c.components])
    for corner in corners:
        owners = sum(
            1
            for cell in cells
            if all(
                lo <= a and a + 1 <= hi
                for lo, a, hi in zip(cell.c_min.components, corner, cell.c_max.components)
            )
        )
        if owners != 1:
            return False
    return sum(cell_volume(cell) for cell in cells) == extended_sync_volume(c)


@dataclass(frozen=True)
class Region:
    """Open orthant around center: below it where the sign is -1, above it otherwise"""

    center: CubicCoordinate
    signs: Signs

    def contains(self, x: CubicCoordinate) -> bool:
        return all(
            a < b if s == -1 else a > b
            for a, b, s in zip(x.components, self.center.components, self.signs)
        )


def inhabited_signs(c: CubicCoordinate) -> Dict[Signs, CubicCoordinate]:
    """One witness per sign vector whose region meets CC(n)"""
    witnesses: Dict[Signs, CubicCoordinate] = {}
    for x in enumerate_cc(c.size):
        if any(a == b for a, b in zip(x.components, c.components)):
            continue
        signs = tuple(-1 if a < b else 1 for a, b in zip(x.components, c.components))
        witnesses.setdefault(signs, x)
    return witnesses


def empty_region(c: CubicCoordinate) -> Optional[Region]:
    """A region around c without any coordinate, or None"""
    inhabited = inhabited_signs(c)
    for signs in itertools.product((-1, 1), repeat=len(c)):
        if signs not in inhabited:
            return Region(c, signs)
    return None


def is_external(c: CubicCoordinate) -> bool:
    if c.size == 1:
        return True
    return empty_region(c) is not None


def is_internal(c: CubicCoordinate) -> bool:
    return not is_external(c)


@lru_cache(maxsize=None)
def enumerate_cells(n: int) -> Tuple[Cell, ...]:
    cells = tuple(Cell.from_minimal(c) for c in enumerate_cc(n) if is_minimal_cellular(c))
    logger.debug(f"Enumerated {len(cells)} cells of size {n}")
    return cells
