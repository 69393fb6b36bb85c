"""
Enumeration Service

Serves the enumerations (trees, diagrams, coordinates, cells) through the
enumeration cache and enforces the configured size caps.
"""

import logging
from typing import List, Optional, Tuple

from app.core.cache import EnumerationCache, get_cache
from app.core.config import get_settings
from app.core.errors import CapExceededError, PreconditionError
from app.domain.cells import Cell, enumerate_cells
from app.domain.cubic import CubicCoordinate, covers, enumerate_cc, is_synchronized_cc
from app.domain.diagrams import TamariIntervalDiagram, chapoton_count, enumerate_tid
from app.domain.trees import BinaryTree, enumerate_trees, from_nested, to_nested
from app.schemas.schemas import CountsResponse

logger = logging.getLogger(__name__)


def check_cap(n: int, command: str, cap_override: bool = False) -> None:
    """
    Reject sizes above the cap for a command unless overridden.

    Raises:
        PreconditionError: n < 1
        CapExceededError: n above the cap without override
    """
    if n < 1:
        raise PreconditionError(f"Size must be at least 1, got {n}")
    cap = get_settings().cap_for(command)
    if n <= cap:
        return
    if not cap_override:
        raise CapExceededError(
            f"n={n} exceeds the {command} cap of {cap}; pass --cap-override to run anyway"
        )
    logger.warning(f"Running {command} at n={n} above its cap of {cap}")


class EnumerationService:
    """Cached access to every enumeration at a given size"""

    def __init__(self, cache: Optional[EnumerationCache] = None):
        self.cache = cache or get_cache()

    def coordinates(self, n: int) -> Tuple[CubicCoordinate, ...]:
        records = self.cache.get(
            "cc", n, lambda size: [list(c.components) for c in enumerate_cc(size)]
        )
        return tuple(CubicCoordinate(tuple(record)) for record in records)

    def diagrams(self, n: int) -> Tuple[TamariIntervalDiagram, ...]:
        records = self.cache.get(
            "tid",
            n,
            lambda size: [{"u": list(d.u.word), "v": list(d.v.word)} for d in enumerate_tid(size)],
        )
        return tuple(TamariIntervalDiagram.from_words(r["u"], r["v"]) for r in records)

    def trees(self, n: int) -> Tuple[BinaryTree, ...]:
        records = self.cache.get("trees", n, lambda size: [to_nested(t) for t in enumerate_trees(size)])
        return tuple(from_nested(record) for record in records)

    def cells(self, n: int) -> Tuple[Cell, ...]:
        records = self.cache.get(
            "cells",
            n,
            lambda size: [
                {"min": list(cell.c_min.components), "max": list(cell.c_max.components)}
                for cell in enumerate_cells(size)
            ],
        )
        return tuple(
            Cell(CubicCoordinate(tuple(r["min"])), CubicCoordinate(tuple(r["max"])))
            for r in records
        )

    def cover_edges(self, n: int) -> List[Tuple[int, int]]:
        """Covers of CC(n) as pairs of positions in the cached coordinate order"""
        coordinates = self.coordinates(n)
        position = {c: k for k, c in enumerate(coordinates)}
        return sorted((position[c], position[above]) for c in coordinates for above in covers(c))

    def synchronized(self, n: int) -> List[CubicCoordinate]:
        return [c for c in self.coordinates(n) if is_synchronized_cc(c)]

    def counts(self, n: int) -> CountsResponse:
        coordinates = self.coordinates(n)
        counts = CountsResponse(
            n=n,
            cc=len(coordinates),
            synchronized=sum(1 for c in coordinates if is_synchronized_cc(c)),
            cells=len(self.cells(n)),
            trees=len(self.trees(n)),
            edges=len(self.cover_edges(n)),
            formula=chapoton_count(n),
        )
        logger.info(f"Counts at n={n}: {counts.cc} coordinates, {counts.edges} covers")
        return counts

    def materialize(self, representation: str, n: int) -> int:
        """Load or build one enumeration and return its size"""
        loaders = {
            "cc": self.coordinates,
            "tid": self.diagrams,
            "trees": self.trees,
            "cells": self.cells,
        }
        if representation not in loaders:
            raise PreconditionError(f"Unknown representation {representation!r}")
        return len(loaders[representation](n))
