"""Colored planar rooted trees, leaf-colored trees and tensor words of trees.

A :class:`Tree` is either the bare leaf ``|`` or a node whose color has
degree ``k-1`` when the node has ``k`` children.  The degree of a tree is its
number of leaves minus one, and leaves are numbered ``0..|t|`` from the left.
``graft(t, i, w)`` attaches the root of ``t`` to leaf ``i`` of ``w``.

Text form: ``|`` for the leaf and ``x[t0,t1,...]`` for a node.
"""

from __future__ import annotations

import re
from functools import lru_cache
from itertools import product as cartesian
from math import comb
from typing import Callable, Iterable, Sequence

from .lincomb import DomainError

__all__ = [
    "Tree",
    "LEAF",
    "corolla",
    "graft",
    "multi_graft",
    "vee",
    "canonical_decompose",
    "enum_trees",
    "enum_binary",
    "catalan",
    "super_catalan",
    "parse_tree",
    "tree_from_json",
    "LTree",
    "TensorWord",
    "lleaf",
    "lnode",
    "parse_ltree",
    "parse_tensor_word",
    "enum_ltrees",
    "enum_tensor_words",
    "TREE_CAP",
]

TREE_CAP = 8


class Tree:
    """An immutable planar rooted tree with colored internal nodes."""

    __slots__ = ("color", "children", "degree", "nleaves", "_text", "_hash")

    def __init__(self, color: str | None = None, children: Sequence["Tree"] = ()):
        children = tuple(children)
        if color is None:
            if children:
                raise DomainError("a leaf has no children")
            self.nleaves = 1
            text = "|"
        else:
            if len(children) < 2:
                raise DomainError(f"node {color} needs at least two children")
            self.nleaves = sum(c.nleaves for c in children)
            text = f"{color}[{','.join(c._text for c in children)}]"
        self.color = color
        self.children = children
        self.degree = self.nleaves - 1
        self._text = text
        self._hash = hash(text)

    @property
    def is_leaf(self) -> bool:
        return self.color is None

    def __hash__(self) -> int:
        return self._hash

    def __eq__(self, other) -> bool:
        return isinstance(other, Tree) and (self is other or self._text == other._text)

    def __lt__(self, other: "Tree") -> bool:
        return self.canon() < other.canon()

    def canon(self) -> tuple:
        return (self.degree, self._text)

    def __str__(self) -> str:
        return self._text

    def __repr__(self) -> str:
        return f"Tree({self._text})"

    def to_json(self) -> dict:
        if self.is_leaf:
            return {"leaf": True}
        return {"color": self.color, "children": [c.to_json() for c in self.children]}

    def colors(self) -> list[str]:
        if self.is_leaf:
            return []
        out = [self.color]
        for c in self.children:
            out += c.colors()
        return out

    def is_binary(self) -> bool:
        return self.is_leaf or (len(self.children) == 2 and all(c.is_binary() for c in self.children))


LEAF = Tree()


def corolla(x: str, arity: int) -> Tree:
    """The corolla with ``arity`` leaves (degree ``arity-1``) colored by ``x``."""
    return Tree(x, [LEAF] * arity)


def graft(t: Tree, i: int, w: Tree) -> Tree:
    """``t ∘_i w``: attach the root of ``t`` to the leaf ``i`` of ``w``."""
    if not 0 <= i <= w.degree:
        raise DomainError(f"leaf index {i} outside 0..{w.degree}")
    return _graft(t, i, w)


def _graft(t: Tree, i: int, w: Tree) -> Tree:
    if w.is_leaf:
        return t
    kids = list(w.children)
    for k, c in enumerate(kids):
        if i < c.nleaves:
            kids[k] = _graft(t, i, c)
            return Tree(w.color, kids)
        i -= c.nleaves
    raise AssertionError("unreachable")


def multi_graft(ts: Sequence[Tree], w: Tree) -> Tree:
    """``(t⁰,...,t^{|w|})∘w``: graft ``tⁱ`` on the leaf ``i`` of ``w``."""
    ts = list(ts)
    if len(ts) != w.nleaves:
        raise DomainError(f"{len(ts)} trees given for a tree with {w.nleaves} leaves")
    it = iter(ts)

    def rec(node: Tree) -> Tree:
        if node.is_leaf:
            return next(it)
        return Tree(node.color, [rec(c) for c in node.children])

    return rec(w)


def vee(x: str, ts: Sequence[Tree]) -> Tree:
    """``⋁_x(t⁰,...,t^r)``: the trees joined under a new root colored by x."""
    if len(ts) < 2:
        raise DomainError("vee needs at least two trees")
    return Tree(x, ts)


def canonical_decompose(t: Tree) -> tuple[str, tuple[Tree, ...]]:
    if t.is_leaf:
        raise DomainError("the leaf has no canonical decomposition")
    return t.color, t.children


def catalan(m: int) -> int:
    return comb(2 * m, m) // (m + 1)


@lru_cache(maxsize=None)
def _planar_count(leaves: int) -> int:
    """Planar trees with the given number of leaves, internal arity ≥ 2."""
    if leaves == 1:
        return 1
    return sum(_forest_count(leaves, k) for k in range(2, leaves + 1))


@lru_cache(maxsize=None)
def _forest_count(leaves: int, k: int) -> int:
    """Ordered k-tuples of planar trees with the given total leaf count."""
    if k == 0:
        return 1 if leaves == 0 else 0
    return sum(_planar_count(a) * _forest_count(leaves - a, k - 1) for a in range(1, leaves - k + 2))


def super_catalan(m: int) -> int:
    """Number of planar rooted trees of degree m (m+1 leaves, arity ≥ 2)."""
    return _planar_count(m + 1)


ColorFn = Callable[[int], Sequence[str]]


def _default_colors(d: int) -> list[str]:
    return [f"xi{d}"]


def _check_cap(m: int) -> None:
    if m > TREE_CAP:
        raise DomainError(f"tree degree {m} exceeds the cap {TREE_CAP}")


@lru_cache(maxsize=None)
def _enum_all(m: int, colors_key) -> tuple[Tree, ...]:
    colors: ColorFn = colors_key if callable(colors_key) else (lambda d: colors_key[d - 1] if d <= len(colors_key) else ())
    if m == 0:
        return (LEAF,)
    out: list[Tree] = []
    leaves = m + 1
    for k in range(2, leaves + 1):
        for x in colors(k - 1):
            for parts in _compositions(leaves, k):
                for kids in cartesian(*(_enum_all(p - 1, colors_key) for p in parts)):
                    out.append(Tree(x, kids))
    return tuple(sorted(out))


def _compositions(n: int, k: int) -> Iterable[tuple[int, ...]]:
    if k == 1:
        if n >= 1:
            yield (n,)
        return
    for a in range(1, n - k + 2):
        for rest in _compositions(n - a, k - 1):
            yield (a,) + rest


def enum_binary(m: int, colors: Sequence[str] = ("x",)) -> list[Tree]:
    """Binary trees with m internal vertices, vertices colored from ``colors``."""
    _check_cap(m)
    return list(_enum_binary(m, tuple(colors)))


@lru_cache(maxsize=None)
def _enum_binary(m: int, colors: tuple[str, ...]) -> tuple[Tree, ...]:
    if m == 0:
        return (LEAF,)
    out = []
    for a in range(m):
        for l in _enum_binary(a, colors):
            for r in _enum_binary(m - 1 - a, colors):
                for x in colors:
                    out.append(Tree(x, (l, r)))
    return tuple(sorted(out))


def enum_trees(kind: str, m: int, colors: Sequence[str] | ColorFn | None = None) -> list[Tree]:
    """Enumerate trees of degree ``m``.

    ``kind="binary"``: ``colors`` is a list of degree-1 colors (default ``x``).
    ``kind="all"``: ``colors`` maps a degree ``d`` to the colors for nodes
    with ``d+1`` children (default: the single color ``xi<d>``), or is a
    tuple of per-degree color tuples.
    """
    _check_cap(m)
    if m < 0:
        raise DomainError("tree degree must be non-negative")
    if kind == "binary":
        return enum_binary(m, tuple(colors) if colors is not None else ("x",))
    if kind == "all":
        if colors is None:
            key = _default_colors_key
        elif callable(colors):
            key = colors
        else:
            key = tuple(tuple(c) for c in colors)
        return list(_enum_all(m, key))
    raise DomainError(f"unknown tree kind {kind!r}; expected binary or all")


def _default_colors_key(d: int) -> list[str]:
    return _default_colors(d)


_TOKEN = re.compile(r"\s*([A-Za-z_][A-Za-z0-9_]*|\||\[|\]|,)")


def _tokens(text: str) -> list[str]:
    pos, out = 0, []
    text = text.strip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise DomainError(f"unexpected character in tree {text!r} at {pos}")
        out.append(m.group(1))
        pos = m.end()
        while pos < len(text) and text[pos].isspace():
            pos += 1
    return out


def parse_tree(text: str, degree_of: Callable[[str], int] | None = None) -> Tree:
    """Parse the preorder grammar ``|`` / ``x[t0,...,tr]``.

    When ``degree_of`` is given, each node's arity is checked against the
    degree of its color.
    """
    toks = _tokens(text)
    pos = 0

    def rec() -> Tree:
        nonlocal pos
        if pos >= len(toks):
            raise DomainError(f"truncated tree {text!r}")
        tok = toks[pos]
        pos += 1
        if tok == "|":
            return LEAF
        if tok in "[],":
            raise DomainError(f"unexpected {tok!r} in tree {text!r}")
        if pos >= len(toks) or toks[pos] != "[":
            raise DomainError(f"color {tok} must be followed by [ in {text!r}")
        pos += 1
        kids = [rec()]
        while pos < len(toks) and toks[pos] == ",":
            pos += 1
            kids.append(rec())
        if pos >= len(toks) or toks[pos] != "]":
            raise DomainError(f"missing ] in tree {text!r}")
        pos += 1
        if degree_of is not None and degree_of(tok) != len(kids) - 1:
            raise DomainError(f"node {tok} has {len(kids)} children but degree {degree_of(tok)}")
        return Tree(tok, kids)

    t = rec()
    if pos != len(toks):
        raise DomainError(f"trailing input in tree {text!r}")
    return t


def tree_from_json(data: dict) -> Tree:
    if data.get("leaf"):
        return LEAF
    return Tree(data["color"], [tree_from_json(c) for c in data["children"]])


# ---------------------------------------------------------------------------
# leaf-colored trees and tensor words of them
# ---------------------------------------------------------------------------

class LTree:
    """A planar tree whose leaves carry colors; internal vertices have ≥ 2 inputs.

    Text form: a leaf is its color name, a node is ``[t1,...,tr]``.
    """

    __slots__ = ("label", "children", "degree", "_text", "_hash")

    def __init__(self, label: str | None, children: Sequence["LTree"] = ()):
        children = tuple(children)
        if label is not None:
            if children:
                raise DomainError("a colored leaf has no children")
            self.degree = 1
            text = label
        else:
            if len(children) < 2:
                raise DomainError("an internal vertex needs at least two inputs")
            self.degree = sum(c.degree for c in children)
            text = "[" + ",".join(c._text for c in children) + "]"
        self.label = label
        self.children = children
        self._text = text
        self._hash = hash(text)

    @property
    def is_leaf(self) -> bool:
        return self.label is not None

    def __hash__(self) -> int:
        return self._hash

    def __eq__(self, other) -> bool:
        return isinstance(other, LTree) and self._text == other._text

    def canon(self) -> tuple:
        return (self.degree, self._text)

    def __str__(self) -> str:
        return self._text

    def __repr__(self) -> str:
        return f"LTree({self._text})"

    def to_json(self):
        if self.is_leaf:
            return {"leaf": self.label}
        return {"children": [c.to_json() for c in self.children]}


def lleaf(e: str) -> LTree:
    return LTree(e)


def lnode(children: Sequence[LTree]) -> LTree:
    return LTree(None, children)


class TensorWord(tuple):
    """A tensor word ``t¹⊗...⊗t^k`` of leaf-colored trees.

    The empty word is the unit (degree 0); basis elements are nonempty.
    """

    __slots__ = ()

    def __new__(cls, factors: Iterable[LTree] = ()):
        return super().__new__(cls, tuple(factors))

    @property
    def degree(self) -> int:
        return sum(t.degree for t in self)

    def canon(self) -> tuple:
        return (self.degree, len(self)) + tuple(t._text for t in self)

    def __str__(self) -> str:
        return "⊗".join(str(t) for t in self) if self else "1"

    def __repr__(self) -> str:
        return f"TensorWord({self})"

    def to_json(self):
        return [t.to_json() for t in self]


_LTOKEN = re.compile(r"\s*([A-Za-z_][A-Za-z0-9_]*|\[|\]|,)")


def parse_ltree(text: str) -> LTree:
    toks: list[str] = []
    pos = 0
    text = text.strip()
    while pos < len(text):
        m = _LTOKEN.match(text, pos)
        if not m:
            raise DomainError(f"unexpected character in leaf-colored tree {text!r}")
        toks.append(m.group(1))
        pos = m.end()
        while pos < len(text) and text[pos].isspace():
            pos += 1
    i = 0

    def rec() -> LTree:
        nonlocal i
        if i >= len(toks):
            raise DomainError(f"truncated tree {text!r}")
        tok = toks[i]
        i += 1
        if tok == "[":
            kids = [rec()]
            while i < len(toks) and toks[i] == ",":
                i += 1
                kids.append(rec())
            if i >= len(toks) or toks[i] != "]":
                raise DomainError(f"missing ] in {text!r}")
            i += 1
            return lnode(kids)
        if tok in "],":
            raise DomainError(f"unexpected {tok!r} in {text!r}")
        return lleaf(tok)

    t = rec()
    if i != len(toks):
        raise DomainError(f"trailing input in {text!r}")
    return t


def parse_tensor_word(text: str) -> TensorWord:
    """Parse ``t1⊗t2`` (``(x)`` is accepted for ⊗)."""
    parts = text.replace("(x)", "⊗").split("⊗")
    if not text.strip():
        raise DomainError("a tensor word has at least one factor")
    return TensorWord(parse_ltree(p) for p in parts)


@lru_cache(maxsize=None)
def _enum_ltrees(n: int, colors: tuple[str, ...]) -> tuple[LTree, ...]:
    if n == 1:
        return tuple(lleaf(e) for e in colors)
    out = []
    for k in range(2, n + 1):
        for parts in _compositions(n, k):
            for kids in cartesian(*(_enum_ltrees(p, colors) for p in parts)):
                out.append(lnode(kids))
    return tuple(sorted(out, key=LTree.canon))


def enum_ltrees(n: int, colors: Sequence[str] = ("e",)) -> list[LTree]:
    """Leaf-colored planar trees with n leaves."""
    _check_cap(n)
    return list(_enum_ltrees(n, tuple(colors)))


@lru_cache(maxsize=None)
def _enum_tensor_words(n: int, colors: tuple[str, ...]) -> tuple[TensorWord, ...]:
    out = []
    for k in range(1, n + 1):
        for parts in _compositions(n, k):
            for fs in cartesian(*(_enum_ltrees(p, colors) for p in parts)):
                out.append(TensorWord(fs))
    return tuple(sorted(out, key=TensorWord.canon))


def enum_tensor_words(n: int, colors: Sequence[str] = ("e",)) -> list[TensorWord]:
    """All tensor words of total degree n (basis of the degree-n part of 2-ass)."""
    _check_cap(n)
    return list(_enum_tensor_words(n, tuple(colors)))
