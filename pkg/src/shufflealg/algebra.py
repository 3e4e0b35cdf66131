"""Algebra contexts: one object per ambient algebra, bundling basis, products and coproduct.

Tags:

``mr``      permutations (Malvenuto-Reutenauer), Δ by standardized deconcatenation
``psh``     colored surjection words K[P∞,X] with the Θ-twisted coproduct
``kw``      colored K-words K[K∞,X] (preshuffle products only)
``fw``      function words (shuffle products only, no coproduct)
``pqsym``   parking functions with Δ through Park
``trees``   colored planar trees K[T∞,X] with the Θ-twisted tree coproduct
``ybin``    binary trees K[Y∞] with Δ_PR
``dup``     binary trees with vertices colored by a set E, Δ_PR
``as1``     As[1] = ⊕ K[S_{n+1}] with operadic substitution and Δ_As
``twoass``  tensor words of leaf-colored trees, products · and ∘
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Any, Callable, Sequence

from . import coproducts as cop
from . import products as prd
from .lincomb import DomainError, Lin
from .perms import enum_perms, epsilon, format_word, is_perm, omega, parse_perm
from .trees import (
    LEAF,
    enum_binary,
    enum_tensor_words,
    enum_trees,
    graft,
    parse_tensor_word,
    parse_tree,
)
from .words import (
    ColoredWord,
    ThetaTable,
    default_theta,
    enum_kwords,
    enum_parking,
    enum_surjections,
    fibers,
    format_colored_word,
    is_kword,
    is_parking,
    parse_colored_word,
)

__all__ = [
    "Algebra",
    "PermAlgebra",
    "ColoredWordAlgebra",
    "FunctionWordAlgebra",
    "ParkingAlgebra",
    "TreeAlgebra",
    "As1Algebra",
    "TwoAssAlgebra",
    "TAGS",
    "make_algebra",
    "parse_lin",
]

TAGS = ("mr", "psh", "kw", "fw", "pqsym", "trees", "ybin", "dup", "as1", "twoass")


class Algebra:
    """Base class; subclasses fill in the basis-level hooks."""

    tag = "?"
    label = "?"
    has_shuffle = False
    has_preshuffle = False
    has_delta = False
    has_grafting = False
    unit: Any = ()

    def __init__(self) -> None:
        self._delta_cache: dict = {}
        self._graded_cache: dict = {}

    # -- basis ------------------------------------------------------------
    def degree(self, key) -> int:
        return len(key)

    def basis(self, n: int) -> list:
        raise NotImplementedError

    # -- products ---------------------------------------------------------
    def shuffle(self, a, g, b) -> dict:
        raise DomainError(f"the {self.tag} algebra has no shuffle products")

    def pre(self, a, i, b) -> dict:
        raise DomainError(f"the {self.tag} algebra has no preshuffle products")

    def zero_prod(self, a, b) -> dict:
        return self.pre(a, 0, b)

    def top_prod(self, a, b) -> dict:
        return self.pre(b, self.degree(a), a)

    # -- coproduct --------------------------------------------------------
    def delta_basis(self, key) -> dict:
        try:
            return self._delta_cache[key]
        except KeyError:
            pass
        if not self.has_delta:
            raise DomainError(f"the {self.tag} algebra has no coproduct")
        res = self._delta(key)
        self._delta_cache[key] = res
        return res

    def _delta(self, key) -> dict:
        raise NotImplementedError

    # -- text / json ------------------------------------------------------
    def parse(self, text: str):
        raise NotImplementedError

    def fmt(self, key) -> str:
        return format_word(key) if key else "()"

    def key_json(self, key):
        return list(key)

    def lin(self, text: str) -> Lin:
        return parse_lin(text, self.parse)

    def fmt_lin(self, u: Lin) -> str:
        return u.to_text(self.fmt)

    def basis_lin(self, key) -> Lin:
        return Lin({key: 1})

    def __repr__(self) -> str:
        return f"<{type(self).__name__} {self.tag}>"


class PermAlgebra(Algebra):
    tag = "mr"
    label = "K[S∞] (Malvenuto-Reutenauer)"
    has_shuffle = has_preshuffle = has_delta = True

    def basis(self, n):
        return enum_perms(n)

    def shuffle(self, a, g, b):
        return {prd.perm_shuffle(a, g, b): 1}

    def pre(self, a, i, b):
        return {prd.perm_pre(a, i, b): 1}

    def zero_prod(self, a, b):
        n = len(a)
        return {a + tuple(v + n for v in b): 1}

    def top_prod(self, a, b):
        m = len(b)
        return {tuple(v + m for v in a) + b: 1}

    def _delta(self, key):
        return cop.delta_mr_basis(key)

    def parse(self, text):
        w = parse_perm(text)
        if not is_perm(w):
            raise DomainError(f"{format_word(w)} is not a permutation")
        return w


class ColoredWordAlgebra(Algebra):
    """K[P∞,X] (``psh``) or its K-word part K[K∞,X] (``kw``)."""

    has_preshuffle = has_delta = True

    def __init__(self, theta: ThetaTable | None = None, kwords: bool = False):
        super().__init__()
        self.theta = theta or default_theta()
        self.kwords = kwords
        self.tag = "kw" if kwords else "psh"
        self.label = "K[K∞,X]" if kwords else "K[P∞,X]"
        self.has_shuffle = not kwords
        self.has_grafting = False
        self.unit = ColoredWord((), ())

    def degree(self, key):
        return len(key.word)

    def basis(self, n):
        words = enum_kwords(n) if self.kwords else enum_surjections(n)
        out = []
        for f in words:
            opts = [self.theta.colors_of_degree(d) for d in fibers(f)]
            out += [ColoredWord(f, tuple(cs)) for cs in _cartesian(opts)]
        return out

    def shuffle(self, a, g, b):
        return {prd.cw_shuffle(a, g, b): 1}

    def pre(self, a, i, b):
        return {prd.cw_pre(a, i, b): 1}

    def zero_prod(self, a, b):
        return self.pre(a, 0, b)

    def top_prod(self, a, b):
        return self.pre(b, self.degree(a), a)

    def _delta(self, key):
        return cop.delta_theta_words(key, self.theta)

    def parse(self, text):
        w = parse_colored_word(text, self.theta)
        if self.kwords and not is_kword(w.word):
            raise DomainError(f"{format_word(w.word)} is not a K-word")
        return w

    def fmt(self, key):
        if not key.word:
            return "()"
        return format_colored_word(key, with_colors=not self.theta.single_color_per_degree())

    def key_json(self, key):
        if self.theta.single_color_per_degree():
            return list(key.word)
        return {"f": list(key.word), "colors": list(key.colors)}


def _cartesian(opts):
    from itertools import product

    return product(*opts)


class FunctionWordAlgebra(Algebra):
    tag = "fw"
    label = "K[F∞]"
    has_shuffle = has_preshuffle = True

    def basis(self, n):
        from itertools import product

        return sorted(product(range(1, n + 1), repeat=n))

    def shuffle(self, a, g, b):
        return {prd.fw_shuffle(a, g, b): 1}

    def pre(self, a, i, b):
        return self.shuffle(a, omega(i, len(a), len(b)), b)

    def parse(self, text):
        w = parse_perm(text)
        if any(v < 1 for v in w):
            raise DomainError("function words take positive values")
        return w


class ParkingAlgebra(Algebra):
    tag = "pqsym"
    label = "PQSym"
    has_shuffle = has_preshuffle = has_delta = True

    def basis(self, n):
        return list(enum_parking(n))

    def shuffle(self, a, g, b):
        return {prd.pf_shuffle(a, g, b): 1}

    def pre(self, a, i, b):
        return self.shuffle(a, omega(i, len(a), len(b)), b)

    def zero_prod(self, a, b):
        n = len(a)
        return {a + tuple(v + n for v in b): 1}

    def top_prod(self, a, b):
        return self.shuffle(b, epsilon(len(b), len(a)), a)

    def _delta(self, key):
        return cop.delta_pqsym_basis(key)

    def parse(self, text):
        w = parse_perm(text)
        if not is_parking(w):
            raise DomainError(f"{format_word(w)} is not a parking function")
        return w


class TreeAlgebra(Algebra):
    """Grafting algebras on planar trees.

    ``trees``: all planar trees colored by a graded family, tree Δ_θ.
    ``ybin``: binary trees with the single color ``x``, Δ_PR.
    ``dup``: binary trees with vertices colored by a set E, Δ_PR.
    """

    has_shuffle = has_preshuffle = has_delta = has_grafting = True
    unit = LEAF

    def __init__(self, tag: str = "trees", theta: ThetaTable | None = None, colors: Sequence[str] = ("x",)):
        super().__init__()
        if tag not in ("trees", "ybin", "dup"):
            raise DomainError(f"unknown tree algebra {tag!r}")
        self.tag = tag
        if tag == "trees":
            self.theta = theta or default_theta()
            self.label = "K[T∞,X]"
            self.colors = None
        else:
            self.colors = tuple(colors) if tag == "dup" else ("x",)
            self.theta = ThetaTable.set_colors(self.colors)
            self.label = "K[Y∞]" if tag == "ybin" else f"Dup({','.join(self.colors)})"
        self._memo: dict = {}

    def degree(self, key):
        return key.degree

    def basis(self, n):
        if self.tag == "trees":
            return enum_trees("all", n, self.theta.colors_of_degree)
        return enum_binary(n, self.colors)

    def pre(self, a, i, b):
        return {graft(a, i, b): 1}

    def zero_prod(self, a, b):
        return {graft(a, 0, b): 1}

    def top_prod(self, a, b):
        return {graft(b, a.degree, a): 1}

    def shuffle(self, a, g, b):
        return prd.shuffle_from_grafting_basis(self, a, g, b)

    def _delta(self, key):
        if self.tag == "trees":
            return cop.delta_theta_trees(key, self.theta, self._memo)
        return cop.delta_pr_basis(key, self._memo)

    def parse(self, text):
        if self.tag == "trees":
            return parse_tree(text, self.theta.degree)
        t = parse_tree(text)
        bad = [c for c in t.colors() if c not in self.colors]
        if bad or not t.is_binary():
            raise DomainError(f"{t} is not a binary tree colored by {','.join(self.colors)}")
        return t

    def fmt(self, key):
        return str(key)

    def key_json(self, key):
        return key.to_json()


class As1Algebra(Algebra):
    tag = "as1"
    label = "As[1]"
    has_preshuffle = has_delta = has_grafting = True
    unit = (1,)

    def degree(self, key):
        return len(key) - 1

    def basis(self, n):
        return enum_perms(n + 1)

    def pre(self, a, i, b):
        return {prd.as1_mul(a, i, b): 1}

    def _delta(self, key):
        return cop.delta_as_basis(key)

    def parse(self, text):
        w = parse_perm(text)
        if not w or not is_perm(w):
            raise DomainError(f"{format_word(w)} is not a nonempty permutation")
        return w


class TwoAssAlgebra(Algebra):
    """Tensor words of leaf-colored planar trees with ``·`` and ``∘``.

    ``zero_prod`` is the tensor concatenation ``∘``; ``dot_prod`` is ``·``.
    """

    tag = "twoass"
    has_delta = True
    unit = prd.TWOASS_UNIT

    def __init__(self, colors: Sequence[str] = ("e",)):
        super().__init__()
        self.colors = tuple(colors)
        self.label = f"2-ass({','.join(self.colors)})"
        self._memo: dict = {}

    def degree(self, key):
        return key.degree

    def basis(self, n):
        return enum_tensor_words(n, self.colors)

    def zero_prod(self, a, b):
        return {prd.twoass_circ(a, b): 1}

    def dot_prod(self, a, b):
        return {prd.twoass_dot(a, b): 1}

    def top_prod(self, a, b):
        return {prd.twoass_circ(a, b): 1}

    def _delta(self, key):
        return cop.delta_twoass_basis(key, self._memo)

    def parse(self, text):
        w = parse_tensor_word(text)
        for t in w:
            for leaf in _ltree_leaves(t):
                if leaf not in self.colors:
                    raise DomainError(f"leaf color {leaf!r} not in {','.join(self.colors)}")
        return w

    def fmt(self, key):
        return str(key)

    def key_json(self, key):
        return key.to_json()


def _ltree_leaves(t) -> list[str]:
    if t.is_leaf:
        return [t.label]
    out: list[str] = []
    for c in t.children:
        out += _ltree_leaves(c)
    return out


def make_algebra(
    tag: str,
    theta: ThetaTable | None = None,
    colors: Sequence[str] | None = None,
) -> Algebra:
    """Build a context from its tag."""
    tag = tag.lower()
    if tag == "mr":
        return PermAlgebra()
    if tag in ("psh", "kw"):
        return ColoredWordAlgebra(theta, kwords=(tag == "kw"))
    if tag == "fw":
        return FunctionWordAlgebra()
    if tag == "pqsym":
        return ParkingAlgebra()
    if tag == "trees":
        return TreeAlgebra("trees", theta)
    if tag == "ybin":
        return TreeAlgebra("ybin")
    if tag == "dup":
        return TreeAlgebra("dup", colors=colors or ("x",))
    if tag == "as1":
        return As1Algebra()
    if tag == "twoass":
        return TwoAssAlgebra(colors or ("e",))
    raise DomainError(f"unknown algebra {tag!r}; expected one of {', '.join(TAGS)}")


_SPLIT = re.compile(r"\s+([+-])\s+")
_COEFF = re.compile(r"^\s*([+-]?\s*\d+(?:/\d+)?)\s*\*\s*(.+)$")


def parse_lin(text: str, parse_key: Callable[[str], Any]) -> Lin:
    """Parse ``"c1*W1 + c2*W2 - W3"``; a bare word has coefficient 1."""
    text = text.strip()
    if not text:
        raise DomainError("empty linear combination")
    if text == "0":
        return Lin()
    pieces = _SPLIT.split(text)
    signs = ["+"] + pieces[1::2]
    terms = pieces[0::2]
    acc: dict = {}
    for sign, term in zip(signs, terms):
        term = term.strip()
        coeff = Fraction(1)
        if term.startswith("-") and not _COEFF.match(term):
            coeff, term = Fraction(-1), term[1:].strip()
        m = _COEFF.match(term)
        if m:
            try:
                coeff = Fraction(m.group(1).replace(" ", ""))
            except (ValueError, ZeroDivisionError) as exc:
                raise DomainError(f"bad coefficient in {term!r}") from exc
            term = m.group(2)
        if sign == "-":
            coeff = -coeff
        key = parse_key(term)
        acc[key] = acc.get(key, 0) + coeff
    return Lin(acc)
