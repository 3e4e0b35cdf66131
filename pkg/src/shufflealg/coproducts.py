"""Coproducts on the basis words, iterated and graded versions, unit adjunction.

Every basis-level coproduct here is REDUCED (no ``1⊗x`` or ``x⊗1`` terms),
except :func:`delta_as_basis`, which keeps its degree-0 factors because the
degree-0 permutation ``(1)`` is a genuine basis element of As[1].  Values are
plain dicts ``{(left, right): coefficient}``; the linear-level functions wrap
them into :class:`~shufflealg.lincomb.TensorElem`.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import product as cartesian
from typing import TYPE_CHECKING, Any, Sequence

from .lincomb import DomainError, Lin, TensorElem
from .perms import Perm, standardize
from .products import TWOASS_UNIT, twoass_circ, twoass_dot
from .trees import LEAF, LTree, TensorWord, Tree
from .words import ColoredWord, ThetaTable, pack, park

if TYPE_CHECKING:  # pragma: no cover
    from .algebra import Algebra

__all__ = [
    "delta_mr_basis",
    "delta_theta_words",
    "delta_pqsym_basis",
    "delta_pr_basis",
    "delta_theta_trees",
    "delta_plus_trees",
    "delta_as_basis",
    "delta_as_positional",
    "delta_twoass_basis",
    "deconcat_basis",
    "delta",
    "delta_plus",
    "delta_iter",
    "delta_graded",
    "delta_graded_basis",
    "counit",
    "tensor_apply",
]

Terms = dict


def _add(acc: dict, key, c) -> None:
    v = acc.get(key, 0) + c
    if v:
        acc[key] = v
    else:
        acc.pop(key, None)


# ---------------------------------------------------------------------------
# words
# ---------------------------------------------------------------------------

def delta_mr_basis(s: Perm) -> Terms:
    """``Δ(σ) = Σ_{0<r<n} std(σ(1..r)) ⊗ std(σ(r+1..n))``."""
    return {(standardize(s[:r]), standardize(s[r:])): Fraction(1) for r in range(1, len(s))}


def delta_theta_words(w: ColoredWord, theta: ThetaTable) -> Terms:
    """The Θ-twisted deconcatenation on colored surjection words.

    Cutting after position i packs both halves (ties stay ties).  A value
    whose fiber meets both halves splits its color with the Θ term whose left
    degree is the number of its occurrences in the prefix; a value on one
    side only keeps its color whole.
    """
    f, cols = w.word, w.colors
    n = len(f)
    total = [0] * len(cols)
    for v in f:
        total[v - 1] += 1
    seen = [0] * len(cols)
    out: Terms = {}
    for i in range(1, n):
        seen[f[i - 1] - 1] += 1
        options = []
        ok = True
        for v, col in enumerate(cols):
            a = seen[v]
            opts = theta.split(col, a)
            if not opts:
                ok = False
                break
            options.append(opts)
        if not ok:
            continue
        pw, sw = pack(f[:i]), pack(f[i:])
        for choice in cartesian(*options):
            c = Fraction(1)
            lc, rc = [], []
            for l, r, cc in choice:
                c *= cc
                if l is not None:
                    lc.append(l)
                if r is not None:
                    rc.append(r)
            _add(out, (ColoredWord(pw, tuple(lc)), ColoredWord(sw, tuple(rc))), c)
    return out


def delta_pqsym_basis(f: tuple) -> Terms:
    """``Δ(f) = Σ_{0<r<n} Park(f(1..r)) ⊗ Park(f(r+1..n))``."""
    out: Terms = {}
    for r in range(1, len(f)):
        _add(out, (park(f[:r]), park(f[r:])), Fraction(1))
    return out


def deconcat_basis(w: tuple) -> Terms:
    """Reduced deconcatenation of a word."""
    return {(w[:r], w[r:]): Fraction(1) for r in range(1, len(w))}


# ---------------------------------------------------------------------------
# trees
# ---------------------------------------------------------------------------

def delta_pr_basis(t: Tree, memo: dict | None = None) -> Terms:
    """Reduced coproduct on binary trees (vertex colors primitive).

    ``Δ(t∨w) = Σ t₁⊗(t₂∨w) + t⊗(|∨w) + (t∨|)⊗w + Σ (t∨w₁)⊗w₂``,
    dropping terms with a bare leaf factor.
    """
    if memo is None:
        memo = {}
    if t in memo:
        return memo[t]
    out: Terms = {}
    if not t.is_leaf:
        if len(t.children) != 2:
            raise DomainError(f"{t} is not a binary tree")
        x = t.color
        left, right = t.children
        for (a, b), c in delta_pr_basis(left, memo).items():
            _add(out, (a, Tree(x, (b, right))), c)
        if not left.is_leaf:
            _add(out, (left, Tree(x, (LEAF, right))), Fraction(1))
        if not right.is_leaf:
            _add(out, (Tree(x, (left, LEAF)), right), Fraction(1))
        for (a, b), c in delta_pr_basis(right, memo).items():
            _add(out, (Tree(x, (left, a)), b), c)
    memo[t] = out
    return out


def delta_plus_trees(t: Tree, theta: ThetaTable, memo: dict | None = None) -> Terms:
    """Counital Θ-twisted coproduct on colored planar trees, Δ₊(|) = |⊗|.

    For ``t = x[t⁰,...,tⁿ]`` the terms are, for each cut position i, each
    term ``a⊗b`` of ``Δ₊(tⁱ)`` and each term ``x₁⊗x₂`` of Θ₊(x) with
    ``|x₁| = i``: ``x₁[t⁰..t^{i-1}, a] ⊗ x₂[b, t^{i+1}..tⁿ]``.  A unit half of
    Θ₊ means the single tree ``a`` (or ``b``) passes through.
    """
    if memo is None:
        memo = {}
    if t in memo:
        return memo[t]
    out: Terms = {}
    if t.is_leaf:
        out[(LEAF, LEAF)] = Fraction(1)
    else:
        x = t.color
        kids = t.children
        n = len(kids) - 1
        for i in range(n + 1):
            splits = theta.split(x, i)
            if not splits:
                continue
            for (a, b), c in delta_plus_trees(kids[i], theta, memo).items():
                for x1, x2, c2 in splits:
                    lt = a if x1 is None else Tree(x1, kids[:i] + (a,))
                    rt = b if x2 is None else Tree(x2, (b,) + kids[i + 1 :])
                    _add(out, (lt, rt), c * c2)
    memo[t] = out
    return out


def delta_theta_trees(t: Tree, theta: ThetaTable, memo: dict | None = None) -> Terms:
    """Reduced part of :func:`delta_plus_trees`."""
    full = delta_plus_trees(t, theta, memo)
    return {k: c for k, c in full.items() if not (k[0].is_leaf or k[1].is_leaf)}


# ---------------------------------------------------------------------------
# As[1] and 2-ass
# ---------------------------------------------------------------------------

def _pattern(s: Perm, lo: int, hi: int) -> Perm:
    return standardize([v for v in s if lo <= v <= hi])


def delta_as_basis(s: Perm) -> Terms:
    """``Δ(γ) = Σ_{i=0}^{m} γ|_{1..i+1} ⊗ γ|_{i+1..m+1}`` (overlapping value cut).

    ``γ|_{a..b}`` is the pattern of the letters with values in ``a..b``.
    Degree-0 factors are kept.
    """
    m = len(s) - 1
    out: Terms = {}
    for i in range(m + 1):
        _add(out, (_pattern(s, 1, i + 1), _pattern(s, i + 1, m + 1)), Fraction(1))
    return out


def delta_as_positional(s: Perm) -> Terms:
    """Alternative reading: overlapping cut on positions instead of values."""
    m = len(s) - 1
    out: Terms = {}
    for i in range(m + 1):
        _add(out, (standardize(s[: i + 1]), standardize(s[i:])), Fraction(1))
    return out


def _factor_word(t: LTree) -> TensorWord:
    """The factor t̃ with ``⋁(t¹..t^r) = t̃¹·...·t̃^r``."""
    return TensorWord((t,)) if t.is_leaf else TensorWord(t.children)


def _dot_all(ws: Sequence[TensorWord]) -> TensorWord:
    out = TWOASS_UNIT
    for w in ws:
        out = twoass_dot(out, w)
    return out


def _circ_all(ws: Sequence[TensorWord]) -> TensorWord:
    out = TWOASS_UNIT
    for w in ws:
        out = twoass_circ(out, w)
    return out


def delta_twoass_basis(w: TensorWord, memo: dict | None = None) -> Terms:
    """Reduced coproduct on tensor words of leaf-colored trees.

    Colored leaves are primitive; Δ is a nonunital infinitesimal derivation
    for ``∘`` on the tensor factors and for ``·`` on the factors t̃ of a tree.
    """
    if memo is None:
        memo = {}
    if w in memo:
        return memo[w]
    out: Terms = {}
    if len(w) >= 2:
        factors = [TensorWord((t,)) for t in w]
        prod = _circ_all
    else:
        t = w[0]
        if t.is_leaf:
            memo[w] = out
            return out
        factors = [_factor_word(c) for c in t.children]
        prod = _dot_all
    k = len(factors)
    for j in range(1, k):
        _add(out, (prod(factors[:j]), prod(factors[j:])), Fraction(1))
    for j in range(k):
        for (a, b), c in delta_twoass_basis(factors[j], memo).items():
            left = prod(list(factors[:j]) + [a])
            right = prod([b] + list(factors[j + 1 :]))
            _add(out, (left, right), c)
    memo[w] = out
    return out


# ---------------------------------------------------------------------------
# linear level
# ---------------------------------------------------------------------------

def delta(ctx: "Algebra", u: Lin) -> TensorElem:
    """Reduced coproduct (Δ_As keeps its degree-0 factors)."""
    acc: dict = {}
    for k, c in u.items():
        for key, c2 in ctx.delta_basis(k).items():
            _add(acc, key, c * c2)
    return TensorElem(acc)


def delta_plus(ctx: "Algebra", u: Lin) -> TensorElem:
    """Counital coproduct ``Δ₊(x) = 1⊗x + x⊗1 + Δ(x)``; ``Δ₊(1) = 1⊗1``."""
    one = ctx.unit
    acc: dict = {}
    for k, c in u.items():
        if ctx.degree(k) == 0:
            _add(acc, (k, k), c)
            continue
        _add(acc, (one, k), c)
        _add(acc, (k, one), c)
        for key, c2 in ctx.delta_basis(k).items():
            _add(acc, key, c * c2)
    return TensorElem(acc)


def counit(ctx: "Algebra", u: Lin) -> Fraction:
    return sum((c for k, c in u.items() if ctx.degree(k) == 0), Fraction(0))


def tensor_apply(ctx: "Algebra", t: Lin, slot: int, fn) -> TensorElem:
    """Apply a basis map returning a dict of tuples to one slot of each tensor key."""
    acc: dict = {}
    for key, c in t.items():
        for sub, c2 in fn(key[slot]).items():
            _add(acc, key[:slot] + sub + key[slot + 1 :], c * c2)
    return TensorElem(acc)


def delta_iter(ctx: "Algebra", u: Lin, r: int) -> TensorElem:
    """``Δ^r`` (r+1 tensor factors), iterating on the leftmost factor."""
    if r < 1:
        raise DomainError("iteration count must be at least 1")
    cur = delta(ctx, u)
    for _ in range(r - 1):
        cur = tensor_apply(ctx, cur, 0, ctx.delta_basis)
    return cur


def delta_graded_basis(ctx: "Algebra", key: Any, comp: Sequence[int]) -> Terms:
    """The graded projection ``Δ_{n₁,...,n_k}`` of the iterated reduced coproduct."""
    comp = tuple(comp)
    cache = ctx._graded_cache
    ck = (key, comp)
    if ck in cache:
        return cache[ck]
    if len(comp) == 1:
        res = {(key,): Fraction(1)} if ctx.degree(key) == comp[0] else {}
    else:
        res = {}
        first, rest = comp[0], comp[1:]
        for (a, b), c in ctx.delta_basis(key).items():
            if ctx.degree(a) != first:
                continue
            for tail, c2 in delta_graded_basis(ctx, b, rest).items():
                _add(res, (a,) + tail, c * c2)
    cache[ck] = res
    return res


def delta_graded(ctx: "Algebra", u: Lin, comp: Sequence[int]) -> TensorElem:
    acc: dict = {}
    for k, c in u.items():
        for key, c2 in delta_graded_basis(ctx, k, comp).items():
            _add(acc, key, c * c2)
    return TensorElem(acc)
