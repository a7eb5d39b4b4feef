"""Planar binary trees with decorated internal vertices.

Three kinds of trees share a common leaf (the 1-tree):

* plain trees (``Node``),
* weighted trees (``WeightedNode``): every internal vertex carries a
  weight in Z>=0,
* diweighted trees (``DiNode``): every internal vertex carries a weight
  and a side label, left (``"l"``) or right (``"r"``).

All values are immutable and hashable.  Grafting joins two trees under a
fresh lowest vertex of weight 0; a weight shift adds to the weight of the
lowest vertex only.  Every tree of arity >= 2 decomposes uniquely as a
graft followed by a shift.

Text notation (whitespace-insensitive)::

    tree   := "i" | "(" tree ")" suffix* | "(" tree op tree ")" suffix*
    op     := "v" | "vl" | "vr"
    suffix := "[" nonneg-int "]"

``"v"`` builds weighted nodes, ``"vl"``/``"vr"`` diweighted ones; a
missing suffix means weight 0.  Stacked suffixes add up.
"""

from __future__ import annotations

import math
import re
from functools import lru_cache

LEFT = "l"
RIGHT = "r"
_SIDES = (LEFT, RIGHT)


class NoLowestVertexError(ValueError):
    """A weight shift or decomposition was applied to the 1-tree."""


class TreeSyntaxError(ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class Leaf:
    """The 1-tree.  Use the shared constant ``LEAF``."""

    __slots__ = ()
    arity = 1
    total_weight = 0
    _hash = hash(("tree", "i"))

    def __eq__(self, other):
        return isinstance(other, Leaf)

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return "Leaf()"

    def __str__(self):
        return "i"


LEAF = Leaf()


class Node:
    """Plain internal vertex: no decoration."""

    __slots__ = ("left", "right", "arity", "_hash")
    total_weight = 0

    def __init__(self, left, right):
        self.left = left
        self.right = right
        self.arity = left.arity + right.arity
        self._hash = hash((1, left._hash, right._hash))

    def __eq__(self, other):
        if self is other:
            return True
        return (
            isinstance(other, Node)
            and self._hash == other._hash
            and self.left == other.left
            and self.right == other.right
        )

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"Node({self.left!r}, {self.right!r})"

    def __str__(self):
        return format_tree(self)


class WeightedNode:
    """Internal vertex carrying a non-negative integer weight."""

    __slots__ = ("left", "right", "weight", "arity", "total_weight", "_hash")

    def __init__(self, left, right, weight: int):
        if weight < 0:
            raise ValueError(f"vertex weight must be >= 0, got {weight}")
        self.left = left
        self.right = right
        self.weight = weight
        self.arity = left.arity + right.arity
        self.total_weight = left.total_weight + right.total_weight + weight
        self._hash = hash((2, left._hash, right._hash, weight))

    def __eq__(self, other):
        if self is other:
            return True
        return (
            isinstance(other, WeightedNode)
            and self._hash == other._hash
            and self.weight == other.weight
            and self.left == other.left
            and self.right == other.right
        )

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"WeightedNode({self.left!r}, {self.right!r}, {self.weight})"

    def __str__(self):
        return format_tree(self)


class DiNode:
    """Internal vertex carrying a weight and a side label."""

    __slots__ = ("left", "right", "weight", "side", "arity", "total_weight", "_hash")

    def __init__(self, left, right, weight: int, side: str):
        if weight < 0:
            raise ValueError(f"vertex weight must be >= 0, got {weight}")
        if side not in _SIDES:
            raise ValueError(f"side must be {LEFT!r} or {RIGHT!r}, got {side!r}")
        self.left = left
        self.right = right
        self.weight = weight
        self.side = side
        self.arity = left.arity + right.arity
        self.total_weight = left.total_weight + right.total_weight + weight
        self._hash = hash((3, left._hash, right._hash, weight, side))

    def __eq__(self, other):
        if self is other:
            return True
        return (
            isinstance(other, DiNode)
            and self._hash == other._hash
            and self.weight == other.weight
            and self.side == other.side
            and self.left == other.left
            and self.right == other.right
        )

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"DiNode({self.left!r}, {self.right!r}, {self.weight}, {self.side!r})"

    def __str__(self):
        return format_tree(self)


# ---------------------------------------------------------------------------
# grafting, shifting, decomposing


def graft(a, b) -> Node:
    """Join two plain trees under a new lowest vertex."""
    return Node(a, b)


def graft_weighted(a, b) -> WeightedNode:
    """Join two weighted trees; the new lowest vertex has weight 0."""
    return WeightedNode(a, b, 0)


def graft_di(a, b, side: str) -> DiNode:
    """Join two diweighted trees under a new lowest vertex (0, side)."""
    return DiNode(a, b, 0, side)


def shift_weight(tree, m: int) -> WeightedNode:
    """Add ``m`` to the weight of the lowest internal vertex.

    The 1-tree has no lowest internal vertex, so it is rejected even for
    ``m = 0``.
    """
    if m < 0:
        raise ValueError(f"shift must be >= 0, got {m}")
    if isinstance(tree, Leaf):
        raise NoLowestVertexError("cannot shift the weight of the 1-tree")
    if not isinstance(tree, WeightedNode):
        raise TypeError(f"expected a weighted tree, got {type(tree).__name__}")
    if m == 0:
        return tree
    return WeightedNode(tree.left, tree.right, tree.weight + m)


def shift_di(tree, m: int) -> DiNode:
    """Add ``m`` to the weight component of the lowest internal vertex."""
    if m < 0:
        raise ValueError(f"shift must be >= 0, got {m}")
    if isinstance(tree, Leaf):
        raise NoLowestVertexError("cannot shift the weight of the 1-tree")
    if not isinstance(tree, DiNode):
        raise TypeError(f"expected a diweighted tree, got {type(tree).__name__}")
    if m == 0:
        return tree
    return DiNode(tree.left, tree.right, tree.weight + m, tree.side)


def decompose_weighted(tree):
    """Unique (left, right, shift) with graft-then-shift rebuilding ``tree``."""
    if isinstance(tree, Leaf):
        raise NoLowestVertexError("the 1-tree has no decomposition")
    if not isinstance(tree, WeightedNode):
        raise TypeError(f"expected a weighted tree, got {type(tree).__name__}")
    return tree.left, tree.right, tree.weight


def decompose_di(tree):
    """Unique (left, right, side, shift) rebuilding ``tree``."""
    if isinstance(tree, Leaf):
        raise NoLowestVertexError("the 1-tree has no decomposition")
    if not isinstance(tree, DiNode):
        raise TypeError(f"expected a diweighted tree, got {type(tree).__name__}")
    return tree.left, tree.right, tree.side, tree.weight


def tree_kind(tree) -> str:
    """``"leaf"``, ``"plain"``, ``"weighted"`` or ``"di"`` from the root."""
    if isinstance(tree, Leaf):
        return "leaf"
    if isinstance(tree, Node):
        return "plain"
    if isinstance(tree, WeightedNode):
        return "weighted"
    if isinstance(tree, DiNode):
        return "di"
    raise TypeError(f"not a tree: {type(tree).__name__}")


# ---------------------------------------------------------------------------
# enumeration

def catalan(n: int) -> int:
    """The nth Catalan number, (2n)! / (n! (n+1)!)."""
    if n < 0:
        raise ValueError(f"catalan is defined for n >= 0, got {n}")
    return math.comb(2 * n, n) // (n + 1)


@lru_cache(maxsize=None)
def _plain_trees(n: int):
    if n == 1:
        return (LEAF,)
    out = []
    for p in range(1, n):
        for left in _plain_trees(p):
            for right in _plain_trees(n - p):
                out.append(Node(left, right))
    return tuple(out)


def enumerate_trees(n: int) -> list:
    """All plain trees with ``n`` leaves, in canonical order.

    Trees are ordered by arity of the left subtree, then recursively by
    the left and the right subtree.  The list has catalan(n-1) entries.
    """
    if n < 1:
        raise ValueError(f"arity must be >= 1, got {n}")
    return list(_plain_trees(n))


def _weight_vectors(k: int, cap: int):
    # all tuples of k non-negative ints with sum <= cap, lexicographic
    if k == 0:
        yield ()
        return
    for w in range(cap + 1):
        for rest in _weight_vectors(k - 1, cap - w):
            yield (w,) + rest


def _pair_vectors(k: int, cap: int):
    # lexicographic over per-vertex (weight, side) pairs, "l" < "r"
    if k == 0:
        yield ()
        return
    for w in range(cap + 1):
        for side in _SIDES:
            for rest in _pair_vectors(k - 1, cap - w):
                yield ((w, side),) + rest


def _attach_weights(shape, weights, pos):
    # weights are consumed along a pre-order walk of internal vertices
    if isinstance(shape, Leaf):
        return LEAF, pos
    deco = weights[pos]
    left, pos = _attach_weights(shape.left, weights, pos + 1)
    right, pos = _attach_weights(shape.right, weights, pos)
    return WeightedNode(left, right, deco), pos


def _attach_pairs(shape, pairs, pos):
    if isinstance(shape, Leaf):
        return LEAF, pos
    weight, side = pairs[pos]
    left, pos = _attach_pairs(shape.left, pairs, pos + 1)
    right, pos = _attach_pairs(shape.right, pairs, pos)
    return DiNode(left, right, weight, side), pos


def enumerate_weighted(n: int, max_total: int) -> list:
    """All weighted n-trees with total weight <= ``max_total``.

    Canonical order: underlying shape first, then the weight vector read
    along a pre-order walk, lexicographically.  The list has
    catalan(n-1) * binom(max_total + n - 1, n - 1) entries.
    """
    if n < 1:
        raise ValueError(f"arity must be >= 1, got {n}")
    if max_total < 0:
        raise ValueError(f"weight bound must be >= 0, got {max_total}")
    out = []
    for shape in _plain_trees(n):
        for weights in _weight_vectors(n - 1, max_total):
            out.append(_attach_weights(shape, weights, 0)[0])
    return out


def enumerate_diweighted(n: int, max_total: int) -> list:
    """All diweighted n-trees with total weight <= ``max_total``.

    Same order as ``enumerate_weighted`` with per-vertex (weight, side)
    pairs compared lexicographically; adds a factor 2**(n-1).
    """
    if n < 1:
        raise ValueError(f"arity must be >= 1, got {n}")
    if max_total < 0:
        raise ValueError(f"weight bound must be >= 0, got {max_total}")
    out = []
    for shape in _plain_trees(n):
        for pairs in _pair_vectors(n - 1, max_total):
            out.append(_attach_pairs(shape, pairs, 0)[0])
    return out


# ---------------------------------------------------------------------------
# canonical order keys

def shape_key(tree):
    """Nested-tuple key realizing the canonical order on plain shapes."""
    if isinstance(tree, Leaf):
        return (1,)
    return (tree.arity, shape_key(tree.left), shape_key(tree.right))


def _decorations(tree, out):
    if isinstance(tree, Leaf):
        return
    if isinstance(tree, WeightedNode):
        out.append(tree.weight)
    elif isinstance(tree, DiNode):
        out.append((tree.weight, 0 if tree.side == LEFT else 1))
    _decorations(tree.left, out)
    _decorations(tree.right, out)


def sort_key(tree):
    """Total order key for trees of one kind: shape, then decorations."""
    deco: list = []
    _decorations(tree, deco)
    return (shape_key(tree), tuple(deco))


# ---------------------------------------------------------------------------
# text notation

def format_tree(tree) -> str:
    """Canonical text form; zero-weight suffixes are omitted."""
    if isinstance(tree, Leaf):
        return "i"
    if isinstance(tree, Node):
        op, weight = "v", 0
    elif isinstance(tree, WeightedNode):
        op, weight = "v", tree.weight
    elif isinstance(tree, DiNode):
        op, weight = ("vl" if tree.side == LEFT else "vr"), tree.weight
    else:
        raise TypeError(f"not a tree: {type(tree).__name__}")
    suffix = f"[{weight}]" if weight else ""
    return f"({format_tree(tree.left)} {op} {format_tree(tree.right)}){suffix}"


_TOKEN = re.compile(r"\s*(\(|\)|\[|\]|vl|vr|v|i|\d+)")


def _tokenize(text: str):
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            if text[pos:].strip():
                raise TreeSyntaxError(f"unexpected character {text[pos]!r}", pos)
            break
        tokens.append((m.group(1), m.start(1)))
        pos = m.end()
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = _tokenize(text)
        self.at = 0

    def peek(self):
        if self.at < len(self.tokens):
            return self.tokens[self.at]
        return (None, len(self.text))

    def take(self):
        tok = self.peek()
        self.at += 1
        return tok

    def expect(self, value):
        tok, pos = self.take()
        if tok != value:
            raise TreeSyntaxError(f"expected {value!r}, found {tok!r}", pos)
        return pos

    def tree(self):
        tok, pos = self.take()
        if tok == "i":
            return LEAF
        if tok != "(":
            raise TreeSyntaxError(f"expected 'i' or '(', found {tok!r}", pos)
        left = self.tree()
        tok, oppos = self.take()
        if tok == ")":
            node = left  # redundant parentheses
        elif tok in ("v", "vl", "vr"):
            right = self.tree()
            self.expect(")")
            node = self._make(tok, left, right, oppos)
        else:
            raise TreeSyntaxError(f"expected an operator or ')', found {tok!r}", oppos)
        return self._suffixes(node)

    def _make(self, op, left, right, pos):
        if op == "v":
            for sub in (left, right):
                if isinstance(sub, DiNode):
                    raise TreeSyntaxError("'v' cannot join diweighted subtrees", pos)
            return WeightedNode(left, right, 0)
        for sub in (left, right):
            if isinstance(sub, WeightedNode):
                raise TreeSyntaxError(f"{op!r} cannot join weighted subtrees", pos)
        return DiNode(left, right, 0, LEFT if op == "vl" else RIGHT)

    def _suffixes(self, node):
        while self.peek()[0] == "[":
            self.take()
            tok, pos = self.take()
            if tok is None or not tok.isdigit():
                raise TreeSyntaxError(f"expected a weight, found {tok!r}", pos)
            self.expect("]")
            if isinstance(node, Leaf):
                raise TreeSyntaxError("the 1-tree cannot carry a weight", pos)
            if isinstance(node, WeightedNode):
                node = shift_weight(node, int(tok))
            else:
                node = shift_di(node, int(tok))
        return node


def parse_tree(text: str):
    """Parse the text notation.  Returns a Leaf, weighted or diweighted tree."""
    parser = _Parser(text)
    node = parser.tree()
    tok, pos = parser.peek()
    if tok is not None:
        raise TreeSyntaxError(f"trailing input {tok!r}", pos)
    return node
