"""
Binary trees, right rotations and the Tamari order

Trees are planar, complete and rooted. Internal nodes are numbered 1..n in
infix order (left subtree, node, right subtree) and every operation that
addresses a node does so through that number.
"""

import logging
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from typing import FrozenSet, Iterator, List, NamedTuple, Optional, Sequence, Tuple

import networkx as nx

from app.core.errors import ParseError, PreconditionError, RotationError, SizeMismatchError
from app.domain.diagrams import DualTamariDiagram, TamariDiagram

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class BinaryTree:
    """Either a leaf (no children) or an internal node with two subtrees"""

    left: Optional["BinaryTree"] = None
    right: Optional["BinaryTree"] = None
    _size: int = field(default=0, init=False, repr=False, compare=False)

    def __post_init__(self):
        if (self.left is None) != (self.right is None):
            raise PreconditionError("An internal node needs exactly two children")
        size = 0 if self.left is None else self.left.size + self.right.size + 1
        object.__setattr__(self, "_size", size)

    @property
    def is_leaf(self) -> bool:
        return self.left is None

    @property
    def size(self) -> int:
        """Number of internal nodes"""
        return self._size

    @cached_property
    def bracket_word(self) -> str:
        return to_bracket_word(self)

    def __repr__(self) -> str:
        return f"BinaryTree({self.bracket_word!r})"


LEAF = BinaryTree()


def node(left: BinaryTree = LEAF, right: BinaryTree = LEAF) -> BinaryTree:
    """Internal node with the given subtrees"""
    return BinaryTree(left, right)


class RotationEdge(NamedTuple):
    """Node k is the left child of node l (infix indices)"""

    k: int
    l: int


# ============================================
# Diagram codecs
# ============================================

def _infix_nodes(t: BinaryTree) -> Iterator[BinaryTree]:
    if t.is_leaf:
        return
    yield from _infix_nodes(t.left)
    yield t
    yield from _infix_nodes(t.right)


def to_tamari_diagram(t: BinaryTree) -> TamariDiagram:
    """u_i = number of internal nodes in the right subtree of node i"""
    return TamariDiagram(tuple(n.right.size for n in _infix_nodes(t)))


def to_dual_tamari_diagram(t: BinaryTree) -> DualTamariDiagram:
    """v_i = number of internal nodes in the left subtree of node i"""
    return DualTamariDiagram(tuple(n.left.size for n in _infix_nodes(t)))


def _build_from_right_sizes(word: Sequence[int]) -> BinaryTree:
    n = len(word)
    if n == 0:
        return LEAF
    # smallest position holding its maximum allowed value n - i
    root = next(k for k in range(n) if word[k] == n - 1 - k)
    return BinaryTree(
        _build_from_right_sizes(word[:root]),
        _build_from_right_sizes(word[root + 1:]),
    )


def _build_from_left_sizes(word: Sequence[int]) -> BinaryTree:
    n = len(word)
    if n == 0:
        return LEAF
    # largest position holding its maximum allowed value i - 1
    root = max(k for k in range(n) if word[k] == k)
    return BinaryTree(
        _build_from_left_sizes(word[:root]),
        _build_from_left_sizes(word[root + 1:]),
    )


def from_tamari_diagram(u) -> BinaryTree:
    """
    Inverse of to_tamari_diagram.

    Args:
        u: TamariDiagram or raw word (validated, failing index reported)
    """
    diagram = u if isinstance(u, TamariDiagram) else TamariDiagram(tuple(u))
    return _build_from_right_sizes(diagram.word)


def from_dual_tamari_diagram(v) -> BinaryTree:
    """Inverse of to_dual_tamari_diagram"""
    diagram = v if isinstance(v, DualTamariDiagram) else DualTamariDiagram(tuple(v))
    return _build_from_left_sizes(diagram.word)


# ============================================
# Rotations and canopy
# ============================================

def rotation_edges(t: BinaryTree) -> List[RotationEdge]:
    """Every (k, l) such that node k is the left child of node l, sorted"""
    edges: List[RotationEdge] = []

    def walk(sub: BinaryTree, offset: int) -> None:
        if sub.is_leaf:
            return
        index = offset + sub.left.size + 1
        if not sub.left.is_leaf:
            edges.append(RotationEdge(offset + sub.left.left.size + 1, index))
        walk(sub.left, offset)
        walk(sub.right, index)

    walk(t, 0)
    return sorted(edges)


def right_rotate(t: BinaryTree, edge: Tuple[int, int]) -> BinaryTree:
    """
    Rotate edge (k, l): ((A, B), C) at node l becomes (A, (B, C)) at node k.

    Raises:
        RotationError: node k is not the left child of node l
    """
    k, l = edge

    def rotate(sub: BinaryTree, offset: int) -> BinaryTree:
        if sub.is_leaf:
            raise RotationError(f"Node {l} does not exist", condition="rotation", witness=(k, l))
        index = offset + sub.left.size + 1
        if index == l:
            child = sub.left
            if child.is_leaf or offset + child.left.size + 1 != k:
                raise RotationError(
                    f"Node {k} is not the left child of node {l}",
                    condition="rotation",
                    witness=(k, l),
                )
            return BinaryTree(child.left, BinaryTree(child.right, sub.right))
        if l < index:
            return BinaryTree(rotate(sub.left, offset), sub.right)
        return BinaryTree(sub.left, rotate(sub.right, index))

    return rotate(t, 0)


def canopy(t: BinaryTree) -> str:
    """Leaf orientations read left to right (left 0, right 1), ends dropped"""
    if t.size < 1:
        raise PreconditionError("Canopy needs at least one internal node")
    letters: List[str] = []

    def walk(sub: BinaryTree, orientation: str) -> None:
        if sub.is_leaf:
            letters.append(orientation)
            return
        walk(sub.left, "0")
        walk(sub.right, "1")

    walk(t.left, "0")
    walk(t.right, "1")
    return "".join(letters[1:-1])


# ============================================
# Tamari order
# ============================================

def _check_same_size(s: BinaryTree, t: BinaryTree) -> None:
    if s.size != t.size:
        raise SizeMismatchError(f"Trees of sizes {s.size} and {t.size} are not comparable")


def rotation_closure(s: BinaryTree) -> FrozenSet[BinaryTree]:
    """All trees reachable from s by zero or more right rotations"""
    seen = {s}
    queue = deque([s])
    while queue:
        current = queue.popleft()
        for edge in rotation_edges(current):
            rotated = right_rotate(current, edge)
            if rotated not in seen:
                seen.add(rotated)
                queue.append(rotated)
    return frozenset(seen)


def tamari_leq(s: BinaryTree, t: BinaryTree, use_rotation_oracle: bool = False) -> bool:
    """
    s <= t in the Tamari lattice.

    The default path compares Tamari diagrams componentwise; the rotation
    closure is available behind use_rotation_oracle.
    """
    _check_same_size(s, t)
    if use_rotation_oracle:
        return t in rotation_closure(s)
    u_s, u_t = to_tamari_diagram(s).word, to_tamari_diagram(t).word
    return all(a <= b for a, b in zip(u_s, u_t))


@lru_cache(maxsize=None)
def enumerate_trees(n: int) -> Tuple[BinaryTree, ...]:
    """All binary trees with n internal nodes, ordered by left-subtree size"""
    if n < 0:
        raise PreconditionError(f"Size must be non-negative, got {n}")
    if n == 0:
        return (LEAF,)
    return tuple(
        BinaryTree(left, right)
        for left_size in range(n)
        for left in enumerate_trees(left_size)
        for right in enumerate_trees(n - 1 - left_size)
    )


@lru_cache(maxsize=None)
def rotation_graph(n: int) -> nx.DiGraph:
    """Right-rotation digraph on the trees of size n"""
    graph = nx.DiGraph()
    for t in enumerate_trees(n):
        graph.add_node(t)
        for edge in rotation_edges(t):
            graph.add_edge(t, right_rotate(t, edge), edge=edge)
    logger.debug(f"Rotation graph of size {n}: {graph.number_of_edges()} rotations")
    return graph


@lru_cache(maxsize=None)
def _upper_set(t: BinaryTree) -> FrozenSet[BinaryTree]:
    return frozenset(nx.descendants(rotation_graph(t.size), t)) | {t}


@lru_cache(maxsize=None)
def _lower_set(t: BinaryTree) -> FrozenSet[BinaryTree]:
    return frozenset(nx.ancestors(rotation_graph(t.size), t)) | {t}


def tamari_join(s: BinaryTree, t: BinaryTree) -> BinaryTree:
    """Least common upper bound in the rotation digraph"""
    _check_same_size(s, t)
    bounds = _upper_set(s) & _upper_set(t)
    return next(b for b in bounds if bounds <= _upper_set(b))


def tamari_meet(s: BinaryTree, t: BinaryTree) -> BinaryTree:
    """Greatest common lower bound in the rotation digraph"""
    _check_same_size(s, t)
    bounds = _lower_set(s) & _lower_set(t)
    return next(b for b in bounds if bounds <= _lower_set(b))


def left_comb(n: int) -> BinaryTree:
    """Every internal node is a left child (minimum of the Tamari lattice)"""
    tree = LEAF
    for _ in range(n):
        tree = BinaryTree(tree, LEAF)
    return tree


def right_comb(n: int) -> BinaryTree:
    """Every internal node is a right child (maximum of the Tamari lattice)"""
    tree = LEAF
    for _ in range(n):
        tree = BinaryTree(LEAF, tree)
    return tree


# ============================================
# Serialization
# ============================================

def to_bracket_word(t: BinaryTree) -> str:
    """Internal node -> '(' left ')' right; leaves are implicit"""
    parts: List[str] = []

    def walk(sub: BinaryTree) -> None:
        while not sub.is_leaf:
            parts.append("(")
            walk(sub.left)
            parts.append(")")
            sub = sub.right

    walk(t)
    return "".join(parts)


def from_bracket_word(text: str) -> BinaryTree:
    """Parse a balanced-parenthesis word produced by to_bracket_word"""
    text = text.strip()
    position = 0

    def parse() -> BinaryTree:
        nonlocal position
        if position >= len(text) or text[position] == ")":
            return LEAF
        if text[position] != "(":
            raise ParseError(f"Unexpected character {text[position]!r} at {position}")
        position += 1
        left = parse()
        if position >= len(text) or text[position] != ")":
            raise ParseError(f"Unbalanced bracket word {text!r}")
        position += 1
        return BinaryTree(left, parse())

    tree = parse()
    if position != len(text):
        raise ParseError(f"Unbalanced bracket word {text!r}")
    return tree


def to_nested(t: BinaryTree):
    """JSON form: [left, right] with null for a leaf"""
    if t.is_leaf:
        return None
    return [to_nested(t.left), to_nested(t.right)]


def from_nested(data) -> BinaryTree:
    if data is None:
        return LEAF
    if not isinstance(data, (list, tuple)) or len(data) != 2:
        raise ParseError(f"Expected [left, right] or null, got {data!r}")
    return BinaryTree(from_nested(data[0]), from_nested(data[1]))
