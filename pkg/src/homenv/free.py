"""Free algebras on a Hom-module, with tree-indexed monomial bases.

A monomial is a weighted (or diweighted) tree whose leaves are labelled
by generator indices; elements are finite rational linear combinations
of monomials.  The product grafts trees and concatenates labels; the
twist map acts as the module self-map in degree one and shifts the
lowest vertex weight by one in higher degrees.  In the diweighted
variant there are two products, one per side label.

Windows truncate the infinite basis: ``Window(max_arity, max_weight,
pad)`` keeps monomials of arity <= max_arity and total weight <=
max_weight.  Products and twists of window monomials may leave the
window; the operations here always return the full result and leave any
filtering to the caller.

Element text form: ``"1 * (x0,x1)_(i v i)[1] + ..."`` with the tree
grammar of :mod:`homenv.trees`.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from .algebra import HomAlgebra, HomDialgebra, HomModule
from .linalg import ZERO, mat_mul, to_scalar
from .trees import (
    LEAF,
    LEFT,
    RIGHT,
    DiNode,
    Leaf,
    Node,
    WeightedNode,
    enumerate_diweighted,
    enumerate_weighted,
    format_tree,
    graft_di,
    graft_weighted,
    parse_tree,
    shift_di,
    shift_weight,
    sort_key,
)


@dataclass(frozen=True)
class Window:
    """Truncation of the free algebra: arity and total-weight bounds.

    ``pad`` widens the window during ideal closures; see
    :mod:`homenv.envelope`.
    """

    max_arity: int
    max_weight: int
    pad: int = 0

    def __post_init__(self):
        if self.max_arity < 1:
            raise ValueError(f"max arity must be >= 1, got {self.max_arity}")
        if self.max_weight < 0:
            raise ValueError(f"max weight must be >= 0, got {self.max_weight}")
        if self.pad < 0:
            raise ValueError(f"pad must be >= 0, got {self.pad}")

    def padded(self) -> "Window":
        return Window(self.max_arity + self.pad, self.max_weight + self.pad, 0)

    def admits(self, monomial: "Monomial") -> bool:
        return (
            monomial.arity <= self.max_arity
            and monomial.total_weight <= self.max_weight
        )


class Monomial:
    """A labelled tree: generator index per leaf, left to right."""

    __slots__ = ("tree", "labels", "_hash", "_key")

    def __init__(self, tree, labels):
        labels = tuple(labels)
        if tree.arity != len(labels):
            raise ValueError(f"tree of arity {tree.arity} needs {tree.arity} labels")
        if any(i < 0 for i in labels):
            raise ValueError("generator indices must be >= 0")
        self.tree = tree
        self.labels = labels
        self._hash = hash((tree, labels))
        self._key = None

    @property
    def arity(self):
        return self.tree.arity

    @property
    def total_weight(self):
        return self.tree.total_weight

    def sort_key(self):
        if self._key is None:
            self._key = (self.arity, self.total_weight, sort_key(self.tree), self.labels)
        return self._key

    def __eq__(self, other):
        return (
            isinstance(other, Monomial)
            and self._hash == other._hash
            and self.labels == other.labels
            and self.tree == other.tree
        )

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"Monomial({self.tree!r}, {self.labels})"

    def __str__(self):
        return format_monomial(self)


def generator(i: int) -> Monomial:
    return Monomial(LEAF, (i,))


class Element:
    """Finite linear combination of monomials, zero coefficients dropped."""

    __slots__ = ("_terms",)

    def __init__(self, terms=None):
        data = {}
        if terms:
            items = terms.items() if isinstance(terms, dict) else terms
            for monomial, coeff in items:
                coeff = coeff if isinstance(coeff, Fraction) else to_scalar(coeff)
                acc = data.get(monomial, ZERO) + coeff
                if acc:
                    data[monomial] = acc
                else:
                    data.pop(monomial, None)
        self._terms = data

    @classmethod
    def zero(cls) -> "Element":
        return cls()

    @classmethod
    def monomial(cls, monomial: Monomial, coeff=1) -> "Element":
        return cls([(monomial, coeff)])

    def items(self):
        """Terms in canonical monomial order."""
        return sorted(self._terms.items(), key=lambda mc: mc[0].sort_key())

    def support(self):
        return self._terms.keys()

    def coefficient(self, monomial) -> Fraction:
        return self._terms.get(monomial, ZERO)

    def is_zero(self) -> bool:
        return not self._terms

    def __len__(self):
        return len(self._terms)

    def __add__(self, other):
        out = dict(self._terms)
        for m, c in other._terms.items():
            acc = out.get(m, ZERO) + c
            if acc:
                out[m] = acc
            else:
                out.pop(m, None)
        result = Element.__new__(Element)
        result._terms = out
        return result

    def __neg__(self):
        result = Element.__new__(Element)
        result._terms = {m: -c for m, c in self._terms.items()}
        return result

    def __sub__(self, other):
        return self + (-other)

    def scale(self, coeff) -> "Element":
        coeff = coeff if isinstance(coeff, Fraction) else to_scalar(coeff)
        result = Element.__new__(Element)
        result._terms = {} if not coeff else {m: coeff * c for m, c in self._terms.items()}
        return result

    def __rmul__(self, coeff):
        return self.scale(coeff)

    def __eq__(self, other):
        return isinstance(other, Element) and self._terms == other._terms

    def __repr__(self):
        return f"Element({format_element(self)!r})"

    def __str__(self):
        return format_element(self)


def _graft_monomials(a: Monomial, b: Monomial, join) -> Monomial:
    return Monomial(join(a.tree, b.tree), a.labels + b.labels)


def _check_weighted(m: Monomial, op: str):
    if isinstance(m.tree, DiNode):
        raise TypeError(f"{op} expects weighted monomials, got a diweighted one")
    if isinstance(m.tree, Node):
        raise TypeError(f"{op} expects weighted monomials, got a plain tree")


def _check_di(m: Monomial, op: str):
    if isinstance(m.tree, (WeightedNode, Node)):
        raise TypeError(f"{op} expects diweighted monomials")


def mul_free(a: Element, b: Element) -> Element:
    """Bilinear grafting product on the weighted side."""
    terms = []
    for ma, ca in a._terms.items():
        _check_weighted(ma, "mul_free")
        for mb, cb in b._terms.items():
            _check_weighted(mb, "mul_free")
            terms.append((_graft_monomials(ma, mb, graft_weighted), ca * cb))
    return Element(terms)


def mul_free_di(a: Element, b: Element, side: str) -> Element:
    """Bilinear grafting product on the diweighted side, per side label."""
    if side not in (LEFT, RIGHT):
        raise ValueError(f"side must be {LEFT!r} or {RIGHT!r}, got {side!r}")
    join = lambda s, t: graft_di(s, t, side)
    terms = []
    for ma, ca in a._terms.items():
        _check_di(ma, "mul_free_di")
        for mb, cb in b._terms.items():
            _check_di(mb, "mul_free_di")
            terms.append((_graft_monomials(ma, mb, join), ca * cb))
    return Element(terms)


def _alpha(module: HomModule, a: Element, shift) -> Element:
    terms = []
    for m, c in a._terms.items():
        if isinstance(m.tree, Leaf):
            i = m.labels[0]
            if i >= module.dim:
                raise ValueError(f"generator x{i} outside module of dim {module.dim}")
            for j in range(module.dim):
                coeff = module.alpha[j][i]
                if coeff:
                    terms.append((generator(j), c * coeff))
        else:
            terms.append((Monomial(shift(m.tree, 1), m.labels), c))
    return Element(terms)


def alpha_free(module: HomModule, a: Element) -> Element:
    """Twist map: the module self-map in degree one, weight shift above."""
    return _alpha(module, a, shift_weight)


def alpha_free_di(module: HomModule, a: Element) -> Element:
    return _alpha(module, a, shift_di)


def basis_window(module: HomModule, window: Window, di: bool = False) -> list:
    """All monomials inside the window, in canonical order.

    The order is (arity, total weight, tree, labels).  Empty for a
    zero-dimensional module.
    """
    if module.dim == 0:
        return []
    enumerate_kind = enumerate_diweighted if di else enumerate_weighted
    out = []
    for n in range(1, window.max_arity + 1):
        labelings = _all_labelings(module.dim, n)
        for tree in enumerate_kind(n, window.max_weight):
            for labels in labelings:
                out.append(Monomial(tree, labels))
    out.sort(key=Monomial.sort_key)
    return out


def _all_labelings(dim: int, n: int):
    out = [()]
    for _ in range(n):
        out = [labels + (i,) for labels in out for i in range(dim)]
    return out


def eval_tree_product(algebra: HomAlgebra, tree, args) -> tuple:
    """Multiply ``args`` along a weighted tree in the given algebra.

    A leaf returns its argument; an internal vertex multiplies the two
    subtree values and applies the self-map as many times as its weight.
    """
    if tree.arity != len(args):
        raise ValueError(f"tree of arity {tree.arity} got {len(args)} arguments")
    if isinstance(tree, Leaf):
        return tuple(args[0])
    if not isinstance(tree, WeightedNode):
        raise TypeError(f"expected a weighted tree, got {type(tree).__name__}")
    p = tree.left.arity
    value = algebra.product(
        eval_tree_product(algebra, tree.left, args[:p]),
        eval_tree_product(algebra, tree.right, args[p:]),
    )
    for _ in range(tree.weight):
        value = algebra.module.apply_alpha(value)
    return value


def eval_di_tree_product(dialgebra: HomDialgebra, tree, args) -> tuple:
    """Diweighted version: each vertex multiplies with its side's product."""
    if tree.arity != len(args):
        raise ValueError(f"tree of arity {tree.arity} got {len(args)} arguments")
    if isinstance(tree, Leaf):
        return tuple(args[0])
    if not isinstance(tree, DiNode):
        raise TypeError(f"expected a diweighted tree, got {type(tree).__name__}")
    p = tree.left.arity
    left = eval_di_tree_product(dialgebra, tree.left, args[:p])
    right = eval_di_tree_product(dialgebra, tree.right, args[p:])
    value = dialgebra.left(left, right) if tree.side == LEFT else dialgebra.right(left, right)
    for _ in range(tree.weight):
        value = dialgebra.module.apply_alpha(value)
    return value


def check_intertwines(module: HomModule, algebra, fmat) -> bool:
    """Does the map matrix commute with the two self-maps?"""
    return mat_mul(fmat, module.alpha) == mat_mul(algebra.module.alpha, fmat)


def universal_map(module: HomModule, algebra: HomAlgebra, fmat, element: Element):
    """Evaluate an element in ``algebra`` along a generator assignment.

    ``fmat`` is a dim(algebra) x dim(module) matrix sending generators to
    algebra vectors; it must commute with the self-maps.  On a monomial
    the value is the tree product of the images of its labels, extended
    linearly.
    """
    if not check_intertwines(module, algebra, fmat):
        raise ValueError("the generator assignment does not commute with the self-maps")
    fcols = [tuple(fmat[r][i] for r in range(algebra.dim)) for i in range(module.dim)]
    out = [ZERO] * algebra.dim
    for m, c in element._terms.items():
        if any(i >= module.dim for i in m.labels):
            raise ValueError("element uses generators outside the module")
        value = eval_tree_product(algebra, m.tree, [fcols[i] for i in m.labels])
        for k in range(algebra.dim):
            if value[k]:
                out[k] += c * value[k]
    return tuple(out)


# ---------------------------------------------------------------------------
# text form

def format_monomial(m: Monomial) -> str:
    labels = ",".join(f"x{i}" for i in m.labels)
    return f"({labels})_{format_tree(m.tree)}"


def format_element(e: Element) -> str:
    if e.is_zero():
        return "0"
    parts = []
    for m, c in e.items():
        if not parts:
            parts.append(f"{c} * {format_monomial(m)}")
        elif c < 0:
            parts.append(f"- {-c} * {format_monomial(m)}")
        else:
            parts.append(f"+ {c} * {format_monomial(m)}")
    return " ".join(parts)


_MONOMIAL = re.compile(r"^\((x\d+(?:,x\d+)*)\)_(.+)$")


def parse_monomial(text: str) -> Monomial:
    m = _MONOMIAL.match(text.strip())
    if m is None:
        raise ValueError(f"not a monomial: {text!r}")
    labels = tuple(int(x[1:]) for x in m.group(1).split(","))
    return Monomial(parse_tree(m.group(2)), labels)


def _split_terms(text: str):
    # split on top-level +/- (never inside parentheses or brackets)
    depth = 0
    start = 0
    sign = 1
    first = True
    for at, ch in enumerate(text):
        if ch in "([":
            depth += 1
        elif ch in ")]":
            depth -= 1
        elif ch in "+-" and depth == 0 and not first:
            yield sign, text[start:at]
            sign = 1 if ch == "+" else -1
            start = at + 1
        if not ch.isspace() and not (ch in "+-" and depth == 0):
            first = False
    yield sign, text[start:]


def parse_element(text: str) -> Element:
    text = text.strip()
    if text == "0":
        return Element.zero()
    terms = []
    for sign, chunk in _split_terms(text):
        chunk = chunk.strip()
        if "*" not in chunk:
            raise ValueError(f"term without coefficient: {chunk!r}")
        coeff_text, _, mono_text = chunk.partition("*")
        coeff = sign * Fraction(coeff_text.strip())
        terms.append((parse_monomial(mono_text), coeff))
    return Element(terms)
