"""
Interval-posets and their bijections with Tamari interval diagrams (chi)
and with Tamari intervals (rho).

A relation (a, b) means x_a precedes x_b. It is decreasing when a > b and
increasing when a < b; reflexive pairs are stored explicitly.
"""

import logging
from dataclasses import dataclass
from typing import Dict, FrozenSet, Iterable, List, Literal, Optional, Set, Tuple

import networkx as nx

from app.core.errors import InvalidObjectError, PreconditionError, SizeMismatchError
from app.domain.diagrams import (
    DualTamariDiagram,
    TamariDiagram,
    TamariIntervalDiagram,
    compatibility_violation,
    dual_tamari_violation,
    tamari_violation,
)
from app.domain.trees import (
    LEAF,
    BinaryTree,
    from_dual_tamari_diagram,
    from_tamari_diagram,
    right_rotate,
    rotation_edges,
    tamari_leq,
    to_dual_tamari_diagram,
    to_tamari_diagram,
)

logger = logging.getLogger(__name__)

Relation = Tuple[int, int]


def interval_poset_violation(n: int, relations: FrozenSet[Relation]) -> Optional[Tuple[str, tuple]]:
    """First failing axiom or interval-poset property, or None"""
    for a, b in sorted(relations):
        if not (1 <= a <= n and 1 <= b <= n):
            return "range", (a, b)
    for i in range(1, n + 1):
        if (i, i) not in relations:
            return "reflexive", (i,)
    for a, b in sorted(relations):
        if a != b and (b, a) in relations:
            return "antisymmetric", (min(a, b), max(a, b))

    successors: Dict[int, Set[int]] = {i: set() for i in range(1, n + 1)}
    for a, b in relations:
        successors[a].add(b)
    for a, b in sorted(relations):
        for c in sorted(successors[b]):
            if (a, c) not in relations:
                return "transitive", (a, b, c)

    for k, i in sorted(relations):
        if i < k:
            for j in range(i + 1, k):
                if (j, i) not in relations:
                    return "interval-(i)", (i, j, k)
    for i, k in sorted(relations):
        if i < k:
            for j in range(i + 1, k):
                if (j, k) not in relations:
                    return "interval-(ii)", (i, j, k)
    return None


@dataclass(frozen=True)
class IntervalPoset:
    """Poset on x_1..x_n satisfying both interval-poset properties"""

    n: int
    relations: FrozenSet[Relation]

    def __post_init__(self):
        object.__setattr__(self, "relations", frozenset((int(a), int(b)) for a, b in self.relations))
        if self.n < 0:
            raise PreconditionError(f"Size must be non-negative, got {self.n}")
        violation = interval_poset_violation(self.n, self.relations)
        if violation:
            condition, witness = violation
            raise InvalidObjectError(
                f"Relations of size {self.n} violate {condition} at {witness}",
                condition=condition,
                witness=witness,
            )

    @property
    def size(self) -> int:
        return self.n

    @property
    def decreasing(self) -> List[Relation]:
        """Pairs (j, i) with j > i, sorted"""
        return sorted((a, b) for a, b in self.relations if a > b)

    @property
    def increasing(self) -> List[Relation]:
        """Pairs (i, j) with i < j, sorted"""
        return sorted((a, b) for a, b in self.relations if a < b)

    def precedes(self, a: int, b: int) -> bool:
        return (a, b) in self.relations


def validate_interval_poset(n: int, relations: Iterable[Relation]) -> IntervalPoset:
    """
    Validate a closed relation set.

    Raises:
        InvalidObjectError: with condition in range, reflexive, antisymmetric,
            transitive, interval-(i), interval-(ii)
    """
    return IntervalPoset(n, frozenset(relations))


def _reflexive(n: int) -> Set[Relation]:
    return {(i, i) for i in range(1, n + 1)}


def chi(d: TamariIntervalDiagram) -> IntervalPoset:
    """Decreasing relations from u, increasing relations from v"""
    n = d.size
    relations = _reflexive(n)
    for i, letter in enumerate(d.u.word, start=1):
        relations.update((i + l, i) for l in range(1, letter + 1))
    for i, letter in enumerate(d.v.word, start=1):
        relations.update((i - l, i) for l in range(1, letter + 1))
    return IntervalPoset(n, frozenset(relations))


def chi_inv(p: IntervalPoset) -> TamariIntervalDiagram:
    """Count decreasing and increasing relations per goal vertex"""
    u = [0] * p.n
    v = [0] * p.n
    for a, b in p.relations:
        if a > b:
            u[b - 1] += 1
        elif a < b:
            v[b - 1] += 1
    return TamariIntervalDiagram(TamariDiagram(tuple(u)), DualTamariDiagram(tuple(v)))


def from_minimalist(
    n: int,
    decreasing: Iterable[Relation] = (),
    increasing: Iterable[Relation] = (),
) -> IntervalPoset:
    """
    Close a minimalist arc representation into a full interval-poset.

    Args:
        n: size
        decreasing: arcs (j, i) with j > i
        increasing: arcs (i, j) with i < j
    """
    graph = nx.DiGraph()
    graph.add_nodes_from(range(1, n + 1))
    for a, b in list(decreasing) + list(increasing):
        if a == b:
            continue
        graph.add_edge(a, b)

    while True:
        closed = nx.transitive_closure(graph, reflexive=False)
        added = []
        for a, b in closed.edges():
            low, high = min(a, b), max(a, b)
            for j in range(low + 1, high):
                # both properties relate every vertex strictly between to the goal b
                pair = (j, b)
                if not closed.has_edge(*pair):
                    added.append(pair)
        if not added:
            break
        closed.add_edges_from(added)
        graph = closed

    relations = set(closed.edges()) | _reflexive(n)
    return IntervalPoset(n, frozenset(relations))


def is_new_interval_poset(p: IntervalPoset) -> bool:
    """
    No decreasing relation with source x_n, no increasing relation with
    source x_1, and no pair x_{i+1} < x_{j+1}, x_j < x_i with i < j.
    """
    n = p.n
    if n < 3:
        raise PreconditionError(f"Newness is defined for sizes >= 3, got {n}")
    if any(a == n for a, _ in p.decreasing):
        return False
    if any(a == 1 for a, _ in p.increasing):
        return False
    for i in range(1, n):
        for j in range(i + 1, n):
            if p.precedes(i + 1, j + 1) and p.precedes(j, i):
                return False
    return True


# ============================================
# Tamari intervals
# ============================================

@dataclass(frozen=True)
class TamariInterval:
    """Pair [S, T] of trees of the same size with S <= T"""

    lower: BinaryTree
    upper: BinaryTree

    def __post_init__(self):
        if self.lower.size != self.upper.size:
            raise SizeMismatchError(
                f"Interval bounds have sizes {self.lower.size} and {self.upper.size}"
            )
        if not tamari_leq(self.lower, self.upper):
            raise InvalidObjectError(
                "Lower tree is not below upper tree in the Tamari order",
                condition="tamari-order",
            )

    @property
    def size(self) -> int:
        return self.lower.size


def rho(p: IntervalPoset) -> TamariInterval:
    """Lower tree from the decreasing relations, upper tree from the increasing ones"""
    d = chi_inv(p)
    return TamariInterval(from_tamari_diagram(d.u), from_dual_tamari_diagram(d.v))


def rho_inv(iv: TamariInterval) -> IntervalPoset:
    d = TamariIntervalDiagram(to_tamari_diagram(iv.lower), to_dual_tamari_diagram(iv.upper))
    return chi(d)


def rho_from_forests(p: IntervalPoset) -> TamariInterval:
    """
    Read the decreasing and increasing forests directly.

    In the decreasing forest the parent of x_j is the largest i < j with
    x_j < x_i; a vertex's children become its right subtree and the earlier
    roots its left subtree. The increasing forest is the mirror image.
    """
    n = p.n
    dec_children: Dict[int, List[int]] = {i: [] for i in range(1, n + 1)}
    inc_children: Dict[int, List[int]] = {i: [] for i in range(1, n + 1)}
    dec_roots: List[int] = []
    inc_roots: List[int] = []

    for j in range(1, n + 1):
        parents = [i for i in range(1, j) if p.precedes(j, i)]
        if parents:
            dec_children[max(parents)].append(j)
        else:
            dec_roots.append(j)
    for i in range(1, n + 1):
        parents = [k for k in range(i + 1, n + 1) if p.precedes(i, k)]
        if parents:
            inc_children[min(parents)].append(i)
        else:
            inc_roots.append(i)

    def build_decreasing(roots: List[int]) -> BinaryTree:
        if not roots:
            return LEAF
        last = roots[-1]
        return BinaryTree(build_decreasing(roots[:-1]), build_decreasing(dec_children[last]))

    def build_increasing(roots: List[int]) -> BinaryTree:
        if not roots:
            return LEAF
        first = roots[0]
        return BinaryTree(build_increasing(inc_children[first]), build_increasing(roots[1:]))

    return TamariInterval(build_decreasing(dec_roots), build_increasing(inc_roots))


def interval_covers(iv: TamariInterval) -> Set[TamariInterval]:
    """Rotate the lower tree (while staying below the upper one) or the upper tree"""
    covers: Set[TamariInterval] = set()
    for edge in rotation_edges(iv.lower):
        lower = right_rotate(iv.lower, edge)
        if tamari_leq(lower, iv.upper):
            covers.add(TamariInterval(lower, iv.upper))
    for edge in rotation_edges(iv.upper):
        covers.add(TamariInterval(iv.lower, right_rotate(iv.upper, edge)))
    return covers


def interval_leq(a: TamariInterval, b: TamariInterval, use_rotation_oracle: bool = False) -> bool:
    """[S, T] <= [S', T'] iff S <= S' and T <= T'"""
    return tamari_leq(a.lower, b.lower, use_rotation_oracle) and tamari_leq(
        a.upper, b.upper, use_rotation_oracle
    )


def cover_kind(p: IntervalPoset, p2: IntervalPoset) -> Optional[Literal["star", "diamond"]]:
    """
    Classify p2 against p.

    "star": p2 adds decreasing relations with a single goal x_k and no
    interval-poset between them differs from p only at that goal.
    "diamond": the same for removed increasing relations.
    None otherwise.
    """
    if p.n != p2.n:
        raise SizeMismatchError(f"Sizes differ: {p.n} != {p2.n}")
    added = p2.relations - p.relations
    removed = p.relations - p2.relations
    d, d2 = chi_inv(p), chi_inv(p2)
    u, v = d.u.word, d.v.word

    if added and not removed and all(a > b for a, b in added):
        goals = {b for _, b in added}
        if len(goals) != 1:
            return None
        k = goals.pop() - 1
        for middle in range(u[k] + 1, d2.u.word[k]):
            candidate = u[:k] + (middle,) + u[k + 1:]
            if tamari_violation(candidate) is None and compatibility_violation(candidate, v) is None:
                return None
        return "star"

    if removed and not added and all(a < b for a, b in removed):
        goals = {b for _, b in removed}
        if len(goals) != 1:
            return None
        l = goals.pop() - 1
        for middle in range(d2.v.word[l] + 1, v[l]):
            candidate = v[:l] + (middle,) + v[l + 1:]
            if dual_tamari_violation(candidate) is None and compatibility_violation(u, candidate) is None:
                return None
        return "diamond"

    return None


# ============================================
# Serialization
# ============================================

def to_payload_dict(p: IntervalPoset) -> dict:
    """JSON form with reflexive pairs omitted"""
    return {
        "n": p.n,
        "decreasing": [list(pair) for pair in p.decreasing],
        "increasing": [list(pair) for pair in p.increasing],
    }


def from_payload_dict(data: dict) -> IntervalPoset:
    n = int(data["n"])
    relations = _reflexive(n)
    relations.update(tuple(pair) for pair in data.get("decreasing", []))
    relations.update(tuple(pair) for pair in data.get("increasing", []))
    return IntervalPoset(n, frozenset(relations))
