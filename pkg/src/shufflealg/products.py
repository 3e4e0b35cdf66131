"""Products on basis words, and their bilinear extensions.

Basis-level functions take and return basis keys; the ``*_mul`` style
functions take an algebra context (see :mod:`shufflealg.algebra`) and
linear combinations.  The context supplies ``degree``, ``shuffle`` (the basis
product ``x ∙_γ y``) and ``pre`` (``x ∙_i y``), plus a ``unit`` key of degree 0.

Conventions: ``x∙_γy = (x×y)·γ``; ``x∙₀y`` uses the identity shuffle;
``x∙_top y = y∙_{ε_{m,n}}x``; ``x∙_iy = x∙_{ω_i}y`` with ``ω_i = ε_{n,i}×1``.
"""

from __future__ import annotations

from functools import lru_cache
from typing import TYPE_CHECKING, Any

from .lincomb import DomainError, Lin, bilinear_extend, linear_extend
from .perms import (
    Perm,
    act_right,
    blocks_graft,
    blocks_util,
    concat,
    enum_shuffles,
    is_shuffle,
    standardize,
)
from .trees import LTree, TensorWord, lnode
from .words import ColoredWord

if TYPE_CHECKING:  # pragma: no cover
    from .algebra import Algebra

__all__ = [
    "perm_shuffle",
    "perm_pre",
    "cw_shuffle",
    "cw_pre",
    "pf_shuffle",
    "fw_shuffle",
    "as1_mul",
    "as1_mul_table",
    "twoass_dot",
    "twoass_circ",
    "TWOASS_UNIT",
    "shuffle_mul",
    "bullet0",
    "bullet_top",
    "star",
    "brace",
    "succ",
    "prec",
    "derived_products",
    "dendriform",
    "preshuffle_mul_i",
    "grafting_mul",
    "duplicial",
    "over",
    "under",
    "as1_mul_lin",
    "twoass_mul",
    "dot",
    "circ",
    "shuffle_from_grafting",
    "shuffle_from_grafting_basis",
    "shuffle_from_nui",
    "half_shuffles",
]


# ---------------------------------------------------------------------------
# basis level
# ---------------------------------------------------------------------------

def perm_shuffle(a: Perm, g: Perm, b: Perm) -> Perm:
    """``σ∙_γτ = (σ×τ)·γ`` in the Malvenuto-Reutenauer algebra."""
    return act_right(a + tuple(v + len(a) for v in b), g)


def perm_pre(a: Perm, i: int, b: Perm) -> Perm:
    """``σ∙_iτ = (τ(1)+n, ..., τ(i)+n, σ, τ(i+1)+n, ...)``."""
    n = len(a)
    return tuple(v + n for v in b[:i]) + a + tuple(v + n for v in b[i:])


def cw_shuffle(x: ColoredWord, g: Perm, y: ColoredWord) -> ColoredWord:
    r = len(x.colors)
    return ColoredWord(act_right(x.word + tuple(v + r for v in y.word), g), x.colors + y.colors)


def cw_pre(x: ColoredWord, i: int, y: ColoredWord) -> ColoredWord:
    r = len(x.colors)
    w = tuple(v + r for v in y.word[:i]) + x.word + tuple(v + r for v in y.word[i:])
    return ColoredWord(w, x.colors + y.colors)


def pf_shuffle(f: tuple, g: Perm, h: tuple) -> tuple:
    """Parking functions: concatenation shifts by the length of the left factor."""
    return act_right(concat(f, h, shift=len(f)), g)


def fw_shuffle(f: tuple, g: Perm, h: tuple) -> tuple:
    """Function words: concatenation shifts by the largest letter of the left factor."""
    return act_right(concat(f, h), g)


def as1_mul(s: Perm, i: int, t: Perm) -> Perm:
    """Operadic substitution on As[1]: put σ (shifted by i) in place of letter i+1 of τ.

    Degrees are ``len - 1``; requires ``0 ≤ i ≤ deg τ``.
    """
    m = len(t) - 1
    if not 0 <= i <= m:
        raise DomainError(f"As[1] index {i} outside 0..{m}")
    n = len(s) - 1
    out: list[int] = []
    for v in t:
        if v == i + 1:
            out.extend(w + i for w in s)
        elif v > i + 1:
            out.append(v + n)
        else:
            out.append(v)
    return tuple(out)


def as1_mul_table(s: Perm, i: int, t: Perm) -> Perm:
    """The same product through the (τ̃₁×σ×τ̃₂)·δ_i case table (a cross-check)."""
    N = len(s)
    M = len(t)
    if not 0 <= i < M:
        raise DomainError(f"As[1] index {i} outside 0..{M - 1}")
    low = tuple(v for v in t if v <= i)
    high = tuple(v - i - 1 for v in t if v > i + 1)
    d = _block_shuffle(t, i)
    p = d.index(i + 1) + 1
    di: list[int] = []
    for k in range(1, M + N):
        if k < p:
            dv = d[k - 1]
            di.append(dv if dv <= i else dv + N - 1)
        elif k < p + N:
            di.append(i + (k - p) + 1)
        else:
            dv = d[k - N]
            di.append(dv if dv <= i else dv + N - 1)
    base = standardize(low) + tuple(v + i for v in s) + tuple(v + i + N for v in standardize(high))
    return act_right(base, tuple(di))


def _block_shuffle(t: Perm, i: int) -> Perm:
    """δ ∈ Sh(i,1,m-i) with τ = (τ̃₁×1×τ̃₂)·δ."""
    labels = [0 if v <= i else (1 if v == i + 1 else 2) for v in t]
    nxt = [0, i, i + 1]
    out = []
    for k in labels:
        nxt[k] += 1
        out.append(nxt[k])
    return tuple(out)


TWOASS_UNIT = TensorWord()


def _dot_children(x: TensorWord) -> list[LTree]:
    if len(x) == 1:
        t = x[0]
        return [t] if t.is_leaf else list(t.children)
    return [lnode(x)]


def twoass_dot(x: TensorWord, y: TensorWord) -> TensorWord:
    """The forest-merging product: ``x·y = ⋁(children(x) ++ children(y))``.

    A single colored leaf counts as a one-element forest, and a tensor word
    of length ≥ 2 counts as the forest consisting of its own ⋁.
    """
    if not x:
        return y
    if not y:
        return x
    return TensorWord((lnode(_dot_children(x) + _dot_children(y)),))


def twoass_circ(x: TensorWord, y: TensorWord) -> TensorWord:
    """Tensor concatenation ``x∘y = x⊗y``."""
    return TensorWord(tuple(x) + tuple(y)) if (x or y) else TWOASS_UNIT


# ---------------------------------------------------------------------------
# linear level: shuffle products
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def _valid_shuffle(g: Perm, n: int, m: int) -> bool:
    return len(g) == n + m and is_shuffle(g, (n, m))


def _need(ctx: "Algebra", what: str) -> None:
    if not getattr(ctx, "has_" + what):
        raise DomainError(f"the {ctx.tag} algebra has no {what.replace('_', ' ')} product")


def shuffle_mul(ctx: "Algebra", u: Lin, g: Perm, v: Lin) -> Lin:
    """``u ∙_γ v``; γ must be a shuffle of the degrees of each basis pair."""
    _need(ctx, "shuffle")
    g = tuple(g)

    def op(a, b):
        n, m = ctx.degree(a), ctx.degree(b)
        if not _valid_shuffle(g, n, m):
            raise DomainError(f"{','.join(map(str, g))} is not a ({n},{m})-shuffle")
        return ctx.shuffle(a, g, b)

    return bilinear_extend(op, u, v)


def bullet0(ctx: "Algebra", u: Lin, v: Lin) -> Lin:
    return bilinear_extend(ctx.zero_prod, u, v)


def bullet_top(ctx: "Algebra", u: Lin, v: Lin) -> Lin:
    return bilinear_extend(ctx.top_prod, u, v)


def brace(ctx: "Algebra", u: Lin, v: Lin) -> Lin:
    """``{x,y} = x∙_top y − x∙₀y``."""
    return bullet_top(ctx, u, v) - bullet0(ctx, u, v)


def half_shuffles(n: int, m: int, kind: str) -> list[Perm]:
    """Sh^≻ (last position holds n+m) or Sh^≺ (last position holds n)."""
    sh = enum_shuffles((n, m))
    if n == 0 or m == 0:
        # with an empty side only one half is meaningful; keep the product in ≻/≺ per side
        if kind == "succ":
            return sh if n == 0 else []
        return sh if m == 0 else []
    target = n + m if kind == "succ" else n
    return [g for g in sh if g[-1] == target]


def _sum_over(ctx: "Algebra", u: Lin, v: Lin, pick) -> Lin:
    _need(ctx, "shuffle")

    def op(a, b):
        acc: dict = {}
        for g in pick(ctx.degree(a), ctx.degree(b)):
            for k, c in ctx.shuffle(a, g, b).items():
                acc[k] = acc.get(k, 0) + c
        return Lin(acc)

    return bilinear_extend(op, u, v)


def star(ctx: "Algebra", u: Lin, v: Lin) -> Lin:
    """``x*y = Σ_{γ∈Sh(n,m)} x∙_γy``."""
    return _sum_over(ctx, u, v, lambda n, m: enum_shuffles((n, m)))


def succ(ctx: "Algebra", u: Lin, v: Lin) -> Lin:
    return _sum_over(ctx, u, v, lambda n, m: half_shuffles(n, m, "succ"))


def prec(ctx: "Algebra", u: Lin, v: Lin) -> Lin:
    return _sum_over(ctx, u, v, lambda n, m: half_shuffles(n, m, "prec"))


def derived_products(ctx: "Algebra", u: Lin, v: Lin) -> dict[str, Lin]:
    return {
        "bullet0": bullet0(ctx, u, v),
        "bullet_top": bullet_top(ctx, u, v),
        "star": star(ctx, u, v),
        "brace": brace(ctx, u, v),
    }


def dendriform(ctx: "Algebra", u: Lin, v: Lin) -> dict[str, Lin]:
    return {"succ": succ(ctx, u, v), "prec": prec(ctx, u, v)}


# ---------------------------------------------------------------------------
# preshuffle / grafting
# ---------------------------------------------------------------------------

def preshuffle_mul_i(ctx: "Algebra", u: Lin, i: int, v: Lin) -> Lin:
    """``u ∙_i v``; ``0 ≤ i ≤ deg`` of every basis element of v."""
    _need(ctx, "preshuffle")

    def op(a, b):
        m = ctx.degree(b)
        if not 0 <= i <= m:
            raise DomainError(f"index {i} outside 0..{m}")
        return ctx.pre(a, i, b)

    return bilinear_extend(op, u, v)


grafting_mul = preshuffle_mul_i


def over(ctx: "Algebra", u: Lin, v: Lin) -> Lin:
    """``x/y = x∙₀y`` (graft x on the leftmost leaf of y)."""
    return bullet0(ctx, u, v)


def under(ctx: "Algebra", u: Lin, v: Lin) -> Lin:
    """``x\\y = y∙_{|x|}x`` (graft y on the rightmost leaf of x)."""
    return bullet_top(ctx, u, v)


def duplicial(ctx: "Algebra", u: Lin, v: Lin) -> dict[str, Lin]:
    return {"over": over(ctx, u, v), "under": under(ctx, u, v)}


def as1_mul_lin(u: Lin, i: int, v: Lin) -> Lin:
    return bilinear_extend(lambda a, b: {as1_mul(a, i, b): 1}, u, v)


def dot(u: Lin, v: Lin) -> Lin:
    return bilinear_extend(lambda a, b: {twoass_dot(a, b): 1}, u, v)


def circ(u: Lin, v: Lin) -> Lin:
    return bilinear_extend(lambda a, b: {twoass_circ(a, b): 1}, u, v)


def twoass_mul(ctx: "Algebra", u: Lin, v: Lin) -> dict[str, Lin]:
    return {"dot": dot(u, v), "circ": circ(u, v)}


# ---------------------------------------------------------------------------
# shuffle products derived from other structures
# ---------------------------------------------------------------------------

def shuffle_from_grafting_basis(ctx: "Algebra", a: Any, g: Perm, b: Any) -> Lin:
    """``x∙_γy = Σ x₍₁₎^{n₁}∙_{m₁}(x₍₂₎^{n₂}∙_{m₁+m₂}(...(x₍ᵣ₎^{n_r}∙_{m₁+...+m_r}y)))``.

    The block data come from :func:`blocks_graft`; the iterated coproduct is
    the graded projection of the context's reduced coproduct.
    """
    from .coproducts import delta_graded_basis

    n, m = ctx.degree(a), ctx.degree(b)
    if n == 0:
        return Lin({b: 1})
    if m == 0:
        return Lin({a: 1})
    ns, ms = blocks_graft(g, n, m)
    offsets = []
    acc = 0
    for k in range(len(ns)):
        acc += ms[k]
        offsets.append(acc)
    pieces = delta_graded_basis(ctx, a, ns)
    out: dict = {}
    ylin = Lin({b: 1})
    for factors, c in pieces.items():
        cur = ylin
        for xk, off in zip(reversed(factors), reversed(offsets)):
            cur = linear_extend(lambda w, xk=xk, off=off: ctx.pre(xk, off, w), cur)
        for k, c2 in cur.items():
            out[k] = out.get(k, 0) + c * c2
    return Lin(out)


def shuffle_from_grafting(ctx: "Algebra", u: Lin, g: Perm, v: Lin) -> Lin:
    g = tuple(g)

    def op(a, b):
        n, m = ctx.degree(a), ctx.degree(b)
        if not _valid_shuffle(g, n, m):
            raise DomainError(f"{','.join(map(str, g))} is not a ({n},{m})-shuffle")
        return shuffle_from_grafting_basis(ctx, a, g, b)

    return bilinear_extend(op, u, v)


def shuffle_from_nui(ctx: "Algebra", u: Lin, g: Perm, v: Lin, prod=None) -> Lin:
    """Shuffle product built from a nonunital infinitesimal bialgebra.

    With ``γ = (1..n₁, n+1..n+m₁, n₁+1.., ...)`` (x-block first),
    ``x∙_γy = Σ x₍₁₎·y₍₁₎·x₍₂₎·y₍₂₎·...`` where degree-0 pieces are the unit.
    ``prod`` defaults to the context's ``∙₀``.
    """
    from .coproducts import delta_graded_basis

    prod = prod or ctx.zero_prod
    g = tuple(g)

    def graded(key, comp):
        pos = [c for c in comp if c > 0]
        res = delta_graded_basis(ctx, key, pos)
        out = {}
        for factors, c in res.items():
            it = iter(factors)
            out[tuple(next(it) if p > 0 else ctx.unit for p in comp)] = c
        return out

    def op(a, b):
        n, m = ctx.degree(a), ctx.degree(b)
        if not _valid_shuffle(g, n, m):
            raise DomainError(f"{','.join(map(str, g))} is not a ({n},{m})-shuffle")
        ns, ms = blocks_util(g, n, m)
        acc: dict = {}
        for xs, c1 in graded(a, ns).items():
            for ys, c2 in graded(b, ms).items():
                seq = []
                for xk, yk in zip(xs, ys):
                    seq += [xk, yk]
                cur = Lin({seq[0]: 1})
                for k in seq[1:]:
                    cur = linear_extend(lambda w, k=k: prod(w, k), cur)
                for k, c3 in cur.items():
                    acc[k] = acc.get(k, 0) + c1 * c2 * c3
        return Lin(acc)

    return bilinear_extend(op, u, v)
