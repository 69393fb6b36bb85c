"""
EL-labeling of the cubic coordinate lattice

Each cover (c, c') is labeled (epsilon, i, c_i) where i is the component that
moved and epsilon is -1 when c_i is negative. Labels and label words compare
lexicographically (plain tuple order, so a proper prefix is smaller).
"""

import logging
from collections import Counter
from dataclasses import dataclass, field
from typing import Dict, List, NamedTuple, Optional, Tuple

import networkx as nx

from app.core.errors import NotACoverError, NotComparableError
from app.domain.cubic import (
    CubicCoordinate,
    cc_leq,
    chain_between,
    cover_graph,
    covers,
    enumerate_cc,
    min_increase,
)

logger = logging.getLogger(__name__)


class ELLabel(NamedTuple):
    epsilon: int
    index: int
    value: int

    def __str__(self) -> str:
        return f"({self.epsilon},{self.index},{self.value})"


def el_label(c: CubicCoordinate, c2: CubicCoordinate) -> ELLabel:
    """
    Label of the cover c -> c2.

    Raises:
        NotACoverError: c2 does not cover c
    """
    if c.size != c2.size:
        raise NotACoverError(f"{c} and {c2} differ in size")
    differing = [i for i in range(1, len(c) + 1) if c[i] != c2[i]]
    if len(differing) != 1 or c2 not in covers(c):
        raise NotACoverError(f"{c2} does not cover {c}")
    i = differing[0]
    return ELLabel(-1 if c[i] < 0 else 1, i, c[i])


@dataclass(frozen=True)
class SaturatedChain:
    elements: Tuple[CubicCoordinate, ...]
    labels: Tuple[ELLabel, ...] = field(default=())

    @classmethod
    def from_elements(cls, elements) -> "SaturatedChain":
        elements = tuple(elements)
        labels = tuple(el_label(a, b) for a, b in zip(elements, elements[1:]))
        return cls(elements, labels)

    @property
    def length(self) -> int:
        return len(self.labels)

    @property
    def is_increasing(self) -> bool:
        return all(a < b for a, b in zip(self.labels, self.labels[1:]))

    @property
    def is_weakly_decreasing(self) -> bool:
        return all(a >= b for a, b in zip(self.labels, self.labels[1:]))


def _require_comparable(c: CubicCoordinate, c2: CubicCoordinate) -> None:
    if not cc_leq(c, c2):
        raise NotComparableError(f"{c} is not below {c2}")


def increasing_chain(c: CubicCoordinate, c2: CubicCoordinate) -> SaturatedChain:
    return SaturatedChain.from_elements(chain_between(c, c2))


def weakly_decreasing_chain(c: CubicCoordinate, c2: CubicCoordinate) -> Optional[SaturatedChain]:
    """
    Change every differing non-negative component from right to left, then
    every differing negative one from right to left, one cover each.

    Returns None when a single cover cannot reach the target component, or
    when a component has to pass from negative to positive.
    """
    _require_comparable(c, c2)
    n_components = len(c)
    if any(c[i] < 0 < c2[i] for i in range(1, n_components + 1)):
        return None
    differing = [i for i in range(1, n_components + 1) if c[i] != c2[i]]
    d_plus = [i for i in differing if c[i] >= 0]
    d_minus = [i for i in differing if c[i] < 0]

    elements = [c]
    for i in sorted(d_plus, reverse=True) + sorted(d_minus, reverse=True):
        step = min_increase(elements[-1], i)
        if step is None or step[i] != c2[i]:
            return None
        elements.append(step)
    return SaturatedChain.from_elements(elements)


def all_saturated_chains(c: CubicCoordinate, c2: CubicCoordinate) -> List[SaturatedChain]:
    """Every maximal chain of covers from c to c2, sorted by label word"""
    _require_comparable(c, c2)
    if c == c2:
        return [SaturatedChain((c,))]
    paths = nx.all_simple_paths(cover_graph(c.size), c, c2)
    chains = [SaturatedChain.from_elements(path) for path in paths]
    return sorted(chains, key=lambda chain: chain.labels)


@dataclass
class ShellingVerification:
    """Outcome of an exhaustive EL-labeling check at one size"""

    n: int
    full: bool
    pairs: int = 0
    failures: List[str] = field(default_factory=list)
    certificates: List[Dict] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures


def _check_pair(c: CubicCoordinate, c2: CubicCoordinate, full: bool) -> List[str]:
    problems = []
    canonical = increasing_chain(c, c2)
    if not canonical.is_increasing:
        problems.append(f"{c} -> {c2}: canonical chain is not increasing")
    if not full:
        return problems

    chains = all_saturated_chains(c, c2)
    increasing = [chain for chain in chains if chain.is_increasing]
    if len(increasing) != 1:
        problems.append(f"{c} -> {c2}: {len(increasing)} increasing chains")
    elif increasing[0] != canonical:
        problems.append(f"{c} -> {c2}: increasing chain differs from the canonical one")
    if chains and chains[0].labels != canonical.labels:
        problems.append(f"{c} -> {c2}: increasing chain is not lexicographically first")

    decreasing = [chain for chain in chains if chain.is_weakly_decreasing]
    constructed = weakly_decreasing_chain(c, c2)
    if len(decreasing) > 1:
        problems.append(f"{c} -> {c2}: {len(decreasing)} weakly decreasing chains")
    elif (constructed is None) != (not decreasing) or (decreasing and decreasing[0] != constructed):
        problems.append(f"{c} -> {c2}: weakly decreasing chain mismatch")
    return problems


def verify_el_shellability(n: int, full: bool = True, certificates: bool = False) -> ShellingVerification:
    """
    Check every comparable pair of CC(n).

    With full=False only the canonical chains are checked (no enumeration of
    all saturated chains).
    """
    result = ShellingVerification(n=n, full=full)
    elements = enumerate_cc(n)
    for c in elements:
        for c2 in elements:
            if c == c2 or not cc_leq(c, c2):
                continue
            result.pairs += 1
            result.failures.extend(_check_pair(c, c2, full))
            if certificates:
                chain = increasing_chain(c, c2)
                result.certificates.append(
                    {
                        "from": list(c.components),
                        "to": list(c2.components),
                        "chain": [list(x.components) for x in chain.elements],
                        "labels": [list(label) for label in chain.labels],
                    }
                )
    logger.info(f"EL check at n={n}: {result.pairs} pairs, {len(result.failures)} failures")
    return result


# ============================================
# Moebius function
# ============================================

def mobius_function(n: int) -> Dict[Tuple[CubicCoordinate, CubicCoordinate], int]:
    """mu(c, c2) for every comparable pair, by the recursive sum over [c, c2)"""
    graph = cover_graph(n)
    table: Dict[Tuple[CubicCoordinate, CubicCoordinate], int] = {}
    for c in enumerate_cc(n):
        # sum of components strictly increases along covers
        upper = sorted(nx.descendants(graph, c), key=lambda x: sum(x.components))
        values = {c: 1}
        for y in upper:
            values[y] = -sum(value for z, value in values.items() if cc_leq(z, y))
        for y, value in values.items():
            table[(c, y)] = value
    return table


def mobius_values(n: int) -> Counter:
    """Multiset of the values taken by the Moebius function"""
    return Counter(mobius_function(n).values())
