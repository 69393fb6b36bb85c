"""
Cubic coordinates

A cubic coordinate of size n is an integer tuple c of length n - 1 whose
split (u, v) with u_i = max(c_i, 0) and v_{i+1} = max(-c_i, 0) is a Tamari
interval diagram. The componentwise order on these tuples is isomorphic to
the lattice of Tamari intervals.
"""

import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import FrozenSet, Iterable, List, NamedTuple, Optional, Tuple

import networkx as nx

from app.core.errors import (
    ChainConstructionError,
    InvalidObjectError,
    NotComparableError,
    ParseError,
    PreconditionError,
    SizeMismatchError,
)
from app.domain.diagrams import (
    DualTamariDiagram,
    TamariDiagram,
    TamariIntervalDiagram,
    chapoton_count,
    compatibility_violation,
    dual_tamari_violation,
    enumerate_tid,
    tamari_violation,
)
from app.domain.interval_posets import TamariInterval, chi, chi_inv, rho, rho_inv
from app.domain.trees import tamari_join, tamari_meet

logger = logging.getLogger(__name__)


def split_words(components: Tuple[int, ...]) -> Tuple[Tuple[int, ...], Tuple[int, ...]]:
    """(u, v) words induced by a component tuple, without validation"""
    u = tuple(max(x, 0) for x in components) + (0,)
    v = (0,) + tuple(max(-x, 0) for x in components)
    return u, v


def coordinate_violation(components: Tuple[int, ...]):
    u, v = split_words(components)
    return tamari_violation(u) or dual_tamari_violation(v) or compatibility_violation(u, v)


def is_cubic_coordinate(components: Iterable[int]) -> bool:
    """True iff the tuple induces a valid Tamari interval diagram"""
    return coordinate_violation(tuple(components)) is None


@dataclass(frozen=True, order=True)
class CubicCoordinate:
    """Tuple of n - 1 integers; invalid tuples cannot be constructed"""

    components: Tuple[int, ...]

    def __post_init__(self):
        components = tuple(self.components)
        if any(isinstance(x, bool) or not isinstance(x, int) for x in components):
            raise ParseError(f"Components must be integers, got {components!r}")
        object.__setattr__(self, "components", components)
        violation = coordinate_violation(components)
        if violation:
            condition, witness = violation
            raise InvalidObjectError(
                f"{self} is not a cubic coordinate ({condition} at {witness})",
                condition=condition,
                witness=witness,
            )

    @classmethod
    def of(cls, *components: int) -> "CubicCoordinate":
        return cls(tuple(components))

    @property
    def size(self) -> int:
        return len(self.components) + 1

    def __getitem__(self, i: int) -> int:
        """1-based component access"""
        return self.components[i - 1]

    def __len__(self) -> int:
        return len(self.components)

    def __str__(self) -> str:
        return "(" + ",".join(str(x) for x in self.components) + ")"


def parse_cubic_coordinate(text: str) -> CubicCoordinate:
    """Parse '(9,-1,2)' (parentheses optional, '()' is the size-1 coordinate)"""
    body = text.strip()
    if body.startswith("(") and body.endswith(")"):
        body = body[1:-1]
    body = body.strip()
    if not body:
        return CubicCoordinate(())
    try:
        components = tuple(int(part) for part in body.split(","))
    except ValueError as exc:
        raise ParseError(f"Cannot parse cubic coordinate {text!r}: {exc}") from exc
    return CubicCoordinate(components)


class DeltaSets(NamedTuple):
    """Indices that move through negative values and through non-negative values"""

    d_minus: FrozenSet[int]
    d_plus: FrozenSet[int]


# ============================================
# Bijections
# ============================================

def phi(c: CubicCoordinate) -> TamariIntervalDiagram:
    u, v = split_words(c.components)
    return TamariIntervalDiagram(TamariDiagram(u), DualTamariDiagram(v))


def phi_inv(d: TamariIntervalDiagram) -> CubicCoordinate:
    """c_i = u_i - v_{i+1}"""
    u, v = d.u.word, d.v.word
    return CubicCoordinate(tuple(u[i] - v[i + 1] for i in range(d.size - 1)))


def psi(iv: TamariInterval) -> CubicCoordinate:
    return phi_inv(chi_inv(rho_inv(iv)))


def psi_inv(c: CubicCoordinate) -> TamariInterval:
    return rho(chi(phi(c)))


# ============================================
# Order, covers, chains
# ============================================

def _check_sizes(c: CubicCoordinate, c2: CubicCoordinate) -> None:
    if c.size != c2.size:
        raise SizeMismatchError(f"Coordinates of sizes {c.size} and {c2.size}")


def cc_leq(c: CubicCoordinate, c2: CubicCoordinate) -> bool:
    """Componentwise comparison"""
    _check_sizes(c, c2)
    return all(a <= b for a, b in zip(c.components, c2.components))


def _check_index(c: CubicCoordinate, i: int) -> None:
    if not 1 <= i <= len(c):
        raise PreconditionError(f"Index {i} outside [1, {len(c)}]")


def replace_component(c: CubicCoordinate, i: int, value: int) -> Tuple[int, ...]:
    components = list(c.components)
    components[i - 1] = value
    return tuple(components)


def min_increase(c: CubicCoordinate, i: int) -> Optional[CubicCoordinate]:
    """
    Smallest valid increase of component i, or None.

    A negative component never goes above 0 and a non-negative one never
    above n - i.
    """
    _check_index(c, i)
    current = c[i]
    bound = 0 if current < 0 else c.size - i
    for value in range(current + 1, bound + 1):
        candidate = replace_component(c, i, value)
        if is_cubic_coordinate(candidate):
            return CubicCoordinate(candidate)
    return None


def covers(c: CubicCoordinate) -> List[CubicCoordinate]:
    """Upper covers of c, one per index that can increase, in index order"""
    result = []
    for i in range(1, len(c) + 1):
        raised = min_increase(c, i)
        if raised is not None:
            result.append(raised)
    return result


def zero_component(c: CubicCoordinate, i: int) -> CubicCoordinate:
    _check_index(c, i)
    if c[i] == 0:
        raise PreconditionError(f"Component {i} of {c} is already 0")
    return CubicCoordinate(replace_component(c, i, 0))


def delta_sets(c: CubicCoordinate, c2: CubicCoordinate) -> DeltaSets:
    _check_sizes(c, c2)
    differing = [d for d in range(1, len(c) + 1) if c[d] != c2[d]]
    return DeltaSets(
        d_minus=frozenset(d for d in differing if c2[d] <= 0),
        d_plus=frozenset(d for d in differing if c[d] >= 0),
    )


def _raise_component(
    chain: List[CubicCoordinate], i: int, target: int
) -> None:
    while chain[-1][i] < target:
        step = min_increase(chain[-1], i)
        if step is None or step[i] > target:
            raise ChainConstructionError(
                f"Cannot raise component {i} of {chain[-1]} to {target}"
            )
        chain.append(step)


def chain_between(c: CubicCoordinate, c2: CubicCoordinate) -> List[CubicCoordinate]:
    """
    Canonical saturated chain from c to c2.

    Negative components are raised first (left to right, never above 0 or
    above their target), then the remaining components left to right.

    Raises:
        NotComparableError: c is not below c2
    """
    if not cc_leq(c, c2):
        raise NotComparableError(f"{c} is not below {c2}")
    chain = [c]
    for i in range(1, len(c) + 1):
        if c[i] < 0 and c[i] != c2[i]:
            _raise_component(chain, i, min(c2[i], 0))
    for i in range(1, len(c) + 1):
        if c2[i] > chain[-1][i]:
            _raise_component(chain, i, c2[i])
    return chain


# ============================================
# Enumeration and the cover graph
# ============================================

@lru_cache(maxsize=None)
def enumerate_cc(n: int) -> Tuple[CubicCoordinate, ...]:
    """All cubic coordinates of size n, sorted lexicographically"""
    if n < 1:
        raise PreconditionError(f"Size must be at least 1, got {n}")
    coordinates = tuple(sorted(phi_inv(d) for d in enumerate_tid(n)))
    logger.debug(f"Enumerated {len(coordinates)} cubic coordinates of size {n}")
    return coordinates


def is_synchronized_cc(c: CubicCoordinate) -> bool:
    return all(x != 0 for x in c.components)


@lru_cache(maxsize=None)
def cover_graph(n: int) -> nx.DiGraph:
    """Hasse diagram of CC(n); each edge carries the index that moved"""
    graph = nx.DiGraph()
    for c in enumerate_cc(n):
        graph.add_node(c)
        for i in range(1, n):
            raised = min_increase(c, i)
            if raised is not None:
                graph.add_edge(c, raised, index=i)
    return graph


# ============================================
# Lattice operations
# ============================================

def join(c: CubicCoordinate, c2: CubicCoordinate) -> CubicCoordinate:
    """Join of the two lower trees and of the two upper trees, mapped back"""
    _check_sizes(c, c2)
    a, b = psi_inv(c), psi_inv(c2)
    return psi(TamariInterval(tamari_join(a.lower, b.lower), tamari_join(a.upper, b.upper)))


def meet(c: CubicCoordinate, c2: CubicCoordinate) -> CubicCoordinate:
    _check_sizes(c, c2)
    a, b = psi_inv(c), psi_inv(c2)
    return psi(TamariInterval(tamari_meet(a.lower, b.lower), tamari_meet(a.upper, b.upper)))


def join_by_bounds(c: CubicCoordinate, c2: CubicCoordinate) -> CubicCoordinate:
    """Least upper bound found by scanning CC(n)"""
    _check_sizes(c, c2)
    bounds = [x for x in enumerate_cc(c.size) if cc_leq(c, x) and cc_leq(c2, x)]
    least = [x for x in bounds if all(cc_leq(x, y) for y in bounds)]
    if len(least) != 1:
        raise ChainConstructionError(f"No unique least upper bound of {c} and {c2}")
    return least[0]


def meet_by_bounds(c: CubicCoordinate, c2: CubicCoordinate) -> CubicCoordinate:
    """Greatest lower bound found by scanning CC(n)"""
    _check_sizes(c, c2)
    bounds = [x for x in enumerate_cc(c.size) if cc_leq(x, c) and cc_leq(x, c2)]
    greatest = [x for x in bounds if all(cc_leq(y, x) for y in bounds)]
    if len(greatest) != 1:
        raise ChainConstructionError(f"No unique greatest lower bound of {c} and {c2}")
    return greatest[0]
