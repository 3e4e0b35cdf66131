"""Primitive elements: the Euler idempotent, primitive bases and the primitive operations.

The operations ``{x,y}``, ``B_q^γ``, ``L_q^p`` and ``μ_n`` are built from the
products of a context; applied to primitive inputs they return primitives.
Formal expressions in these operations are :class:`PrimTerm` trees with a small
text grammar::

    gen(x) | brace(t, t) | B[γ](t; t, ...) | L[q,p](t, ...; t; t) | mu(t, ...)

``L[0,p](y; z)`` omits the empty x-list.  Every operation has a *leading word*:
the first term of its defining formula evaluated on the leading words of its
arguments.  On free algebras this gives the normal-form bijections between
expression bases and irreducible words (:func:`normal_form_alpha`,
:func:`beta_term`, :func:`tree_gamma`).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Any, Callable, Iterable, Sequence

from . import products as prd
from .algebra import Algebra, ColoredWordAlgebra, PermAlgebra, TreeAlgebra
from .coproducts import delta_iter
from .lincomb import DomainError, Lin, TensorElem, echelon_basis, linear_extend, tensor
from .perms import Perm, enum_irr, format_word, inverse, irr, is_shuffle, parse_perm, shuffle_from_labels
from .trees import TensorWord, Tree, corolla, lleaf
from .words import ColoredWord, ThetaTable, default_theta, is_kword

__all__ = [
    "PRIM_CAP",
    "PrimBasis",
    "PrimTerm",
    "euler_e",
    "prim_basis",
    "reconstruct",
    "multiply_back",
    "brace_B",
    "b_admissible",
    "op_L",
    "op_mu",
    "E_sigma",
    "E_theta",
    "generator",
    "evaluate",
    "leading_word",
    "parse_term",
    "cw_factorize",
    "cw_irreducible",
    "irreducible_words",
    "normal_form_alpha",
    "alpha_inverse",
    "beta_term",
    "beta_inverse",
    "gr_basis_terms",
    "tree_gamma",
]

PRIM_CAP = 7


# ---------------------------------------------------------------------------
# helpers
# ---------------------------------------------------------------------------

def _deg(ctx: Algebra, u: Lin, what: str = "argument") -> int:
    degs = {ctx.degree(k) for k in u}
    if len(degs) != 1:
        raise DomainError(f"{what} must be a nonzero homogeneous element")
    return degs.pop()


def _zero_chain(ctx: Algebra, us: Sequence[Lin]) -> Lin:
    out = us[-1]
    for u in reversed(us[:-1]):
        out = prd.bullet0(ctx, u, out)
    return out


def _cache(ctx: Algebra, name: str) -> dict:
    c = ctx.__dict__.get(name)
    if c is None:
        c = ctx.__dict__[name] = {}
    return c


# ---------------------------------------------------------------------------
# Euler idempotent
# ---------------------------------------------------------------------------

def _e_basis(ctx: Algebra, key) -> Lin:
    memo = _cache(ctx, "_euler_cache")
    hit = memo.get(key)
    if hit is not None:
        return hit
    out = Lin({key: 1})
    for (a, b), c in ctx.delta_basis(key).items():
        if ctx.degree(a) == 0 or ctx.degree(b) == 0:
            continue
        out = out - prd.bullet0(ctx, Lin({a: c}), _e_basis(ctx, b))
    memo[key] = out
    return out


def euler_e(ctx: Algebra, u: Lin) -> Lin:
    """``e = Σ_{r≥1} (−1)^{r+1} ∙₀^r ∘ Δ^r``, computed as ``e(x) = x − Σ x₍₁₎∙₀e(x₍₂₎)``.

    Degree-0 tensor factors (present only in As[1]) are ignored, so e acts on
    the reduced part of the coproduct.
    """
    if not ctx.has_delta:
        raise DomainError(f"the {ctx.tag} algebra has no coproduct")
    for k in u:
        if ctx.degree(k) == 0:
            raise DomainError("the Euler idempotent is defined on positive degrees only")
    return linear_extend(lambda k: _e_basis(ctx, k), u)


@dataclass
class PrimBasis:
    degree: int
    elements: list[Lin]
    provenance: list[str]
    labels: list[Any] = field(default_factory=list)

    def __len__(self) -> int:
        return len(self.elements)


def prim_basis(ctx: Algebra, n: int, basis: str = "e", cap: int = PRIM_CAP) -> PrimBasis:
    """A basis of the degree-n primitives.

    ``basis="e"`` takes a maximal independent family of e-images of the basis
    words; ``basis="E"`` uses the explicit families (E_σ on ``mr``, E_θ on
    ``psh``, the L-expression basis on ``kw``, the grafting basis on ``trees``).
    """
    if n < 1:
        raise DomainError("primitives live in positive degrees")
    if n > cap:
        raise DomainError(f"degree {n} exceeds the cap {cap}")
    if basis == "e":
        keys = ctx.basis(n)
        vecs = [euler_e(ctx, Lin({k: 1})) for k in keys]
        idx = echelon_basis(vecs)
        return PrimBasis(n, [vecs[i] for i in idx], ["e-image"] * len(idx), [keys[i] for i in idx])
    if basis != "E":
        raise DomainError(f"unknown basis kind {basis!r}; expected e or E")
    if ctx.tag == "mr":
        labels = enum_irr(n)
        return PrimBasis(n, [E_sigma(s) for s in labels], ["E_sigma"] * len(labels), labels)
    if ctx.tag == "psh":
        labels = irreducible_words(ctx, n)
        return PrimBasis(n, [E_theta(f, ctx=ctx) for f in labels], ["E_theta"] * len(labels), labels)
    if ctx.tag == "kw":
        labels = irreducible_words(ctx, n)
        elems = [evaluate(alpha_inverse(f), ctx) for f in labels]
        return PrimBasis(n, elems, ["bijection"] * len(labels), labels)
    if ctx.tag == "trees":
        terms = gr_basis_terms(ctx.theta, n)
        elems = [evaluate(t, ctx) for t in terms]
        return PrimBasis(n, elems, ["bijection"] * len(terms), [tree_gamma(t, ctx) for t in terms])
    raise DomainError(f"no explicit primitive basis for the {ctx.tag} algebra; use --basis e")


def reconstruct(ctx: Algebra, u: Lin) -> list[TensorElem]:
    """The parts ``(e⊗...⊗e)Δ^{k−1}(u)``, k = 1..deg; their ∙₀-products sum to u."""
    if not u:
        return []
    top = max(ctx.degree(k) for k in u)
    parts = [TensorElem({(k,): c for k, c in euler_e(ctx, u).items()})]
    for k in range(2, top + 1):
        acc = TensorElem()
        for key, c in delta_iter(ctx, u, k - 1).items():
            acc = acc + tensor(*(euler_e(ctx, Lin({a: 1})) for a in key)) * c
        parts.append(acc)
    return parts


def multiply_back(ctx: Algebra, parts: Iterable[TensorElem]) -> Lin:
    out = Lin()
    for t in parts:
        for key, c in t.items():
            out = out + _zero_chain(ctx, [Lin({a: 1}) for a in key]) * c
    return out


# ---------------------------------------------------------------------------
# primitive operations
# ---------------------------------------------------------------------------

def b_admissible(g: Perm, n: int, ms: Sequence[int]) -> bool:
    """Side conditions of ``B_q^γ`` read on positions (γ⁻¹).

    The first letter of x precedes the last letter of y₁ and the first letter
    of y_q precedes the last letter of x.
    """
    gi = inverse(g)
    first_yq = n + sum(ms[:-1]) + 1
    return gi[0] < gi[n + ms[0] - 1] and gi[first_yq - 1] < gi[n - 1]


def brace_B(ctx: Algebra, g: Sequence[int], x: Lin, ys: Sequence[Lin], check: bool = True) -> Lin:
    """``B_q^γ(x; y₁,...,y_q) = x∙_γ(y₁∙₀...∙₀y_q)``."""
    if not ys:
        raise DomainError("B_q^γ needs at least one y argument")
    g = tuple(g)
    n = _deg(ctx, x, "x")
    ms = [_deg(ctx, y, "y") for y in ys]
    if len(g) != n + sum(ms) or not is_shuffle(g, (n, sum(ms))):
        raise DomainError(f"{format_word(g)} is not a ({n},{sum(ms)})-shuffle")
    if check and not b_admissible(g, n, ms):
        raise DomainError(f"{format_word(g)} violates the side conditions of B for degrees {n};{ms}")
    return prd.shuffle_mul(ctx, x, g, _zero_chain(ctx, list(ys)))


def op_L(
    ctx: Algebra,
    q: int,
    p: int,
    xs: Sequence[Lin],
    y: Lin,
    z: Lin,
    zero: Callable[[Lin, Lin], Lin] | None = None,
    pre: Callable[[Lin, int, Lin], Lin] | None = None,
) -> Lin:
    """``L_q^p(x₁,...,x_q; y; z)``.

    ``zero`` and ``pre`` default to the context's ∙₀ and ∙_i; passing other
    callables replays the formula under a different dictionary (used for μ_n).
    """
    zero = zero or (lambda u, v: prd.bullet0(ctx, u, v))
    pre = pre or (lambda u, i, v: prd.preshuffle_mul_i(ctx, u, i, v))
    if q != len(xs):
        raise DomainError(f"L_q expects q = {q} x-arguments, got {len(xs)}")
    m = _deg(ctx, y, "y")
    if not 1 <= p <= m:
        raise DomainError(f"L index p = {p} outside 1..{m}")
    if q == 0:
        if p < m:
            return pre(z, p, y)
        return pre(z, m, y) - zero(y, z)
    ns = [_deg(ctx, x, "x") for x in xs]

    def chain(us):
        out = us[-1]
        for u in reversed(us[:-1]):
            out = zero(u, out)
        return out

    first = pre(z, p + sum(ns), chain(list(xs) + [y]))
    second = zero(xs[0], pre(z, p + sum(ns[1:]), chain(list(xs[1:]) + [y])))
    return first - second


def op_mu(ctx: Algebra, xs: Sequence[Lin]) -> Lin:
    """μ₂ = x·y − x∘y and μ_n = (x₁·(...·x_{n−1}))∘x_n − x₁·((x₂·(...·x_{n−1}))∘x_n)."""
    if ctx.tag != "twoass":
        raise DomainError("μ_n is defined on 2-associative algebras")
    if len(xs) < 2:
        raise DomainError("μ_n needs at least two arguments")

    def dots(us):
        out = us[-1]
        for u in reversed(us[:-1]):
            out = prd.dot(u, out)
        return out

    if len(xs) == 2:
        return prd.dot(xs[0], xs[1]) - prd.circ(xs[0], xs[1])
    first = prd.circ(dots(xs[:-1]), xs[-1])
    second = prd.dot(xs[0], prd.circ(dots(xs[1:-1]), xs[-1]))
    return first - second


# ---------------------------------------------------------------------------
# terms
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class PrimTerm:
    kind: str
    args: tuple["PrimTerm", ...] = ()
    name: str = ""
    gamma: tuple[int, ...] = ()
    q: int = 0
    p: int = 0

    @staticmethod
    def gen(name: str) -> "PrimTerm":
        return PrimTerm("gen", name=name)

    @staticmethod
    def brace(a: "PrimTerm", b: "PrimTerm") -> "PrimTerm":
        return PrimTerm("brace", (a, b))

    @staticmethod
    def B(g: Sequence[int], x: "PrimTerm", ys: Sequence["PrimTerm"]) -> "PrimTerm":
        return PrimTerm("B", (x, *ys), gamma=tuple(g))

    @staticmethod
    def L(q: int, p: int, xs: Sequence["PrimTerm"], y: "PrimTerm", z: "PrimTerm") -> "PrimTerm":
        return PrimTerm("L", (*xs, y, z), q=q, p=p)

    @staticmethod
    def mu(xs: Sequence["PrimTerm"]) -> "PrimTerm":
        return PrimTerm("mu", tuple(xs))

    def __str__(self) -> str:
        a = self.args
        if self.kind == "gen":
            return f"gen({self.name})"
        if self.kind == "brace":
            return f"brace({a[0]}, {a[1]})"
        if self.kind == "B":
            return f"B[{format_word(self.gamma)}]({a[0]}; {', '.join(map(str, a[1:]))})"
        if self.kind == "L":
            xs, y, z = a[:-2], a[-2], a[-1]
            head = f"{', '.join(map(str, xs))}; " if xs else ""
            return f"L[{self.q},{self.p}]({head}{y}; {z})"
        return f"mu({', '.join(map(str, a))})"


def _split_top(s: str, sep: str) -> list[str]:
    out, depth, cur = [], 0, []
    for ch in s:
        if ch in "([":
            depth += 1
        elif ch in ")]":
            depth -= 1
        if ch == sep and depth == 0:
            out.append("".join(cur))
            cur = []
        else:
            cur.append(ch)
    out.append("".join(cur))
    return [p.strip() for p in out]


def _body(text: str, head: str) -> str:
    if not text.startswith(head + "(") or not text.endswith(")"):
        raise DomainError(f"malformed term {text!r}")
    return text[len(head) + 1 : -1]


def parse_term(text: str) -> PrimTerm:
    """Parse the term grammar described in the module docstring."""
    t = text.strip()
    if t.count("(") != t.count(")") or t.count("[") != t.count("]"):
        raise DomainError(f"unbalanced brackets in {text!r}")
    if t.startswith("gen("):
        name = _body(t, "gen").strip()
        if not name or not (name.isalnum() or name.replace("_", "").isalnum()):
            raise DomainError(f"bad generator name {name!r}")
        return PrimTerm.gen(name)
    if t.startswith("brace("):
        parts = _split_top(_body(t, "brace"), ",")
        if len(parts) != 2:
            raise DomainError("brace takes two arguments")
        return PrimTerm.brace(parse_term(parts[0]), parse_term(parts[1]))
    if t.startswith("mu("):
        parts = _split_top(_body(t, "mu"), ",")
        if len(parts) < 2:
            raise DomainError("mu takes at least two arguments")
        return PrimTerm.mu([parse_term(p) for p in parts])
    if t.startswith("B[") or t.startswith("L["):
        close = t.index("]")
        head, rest = t[: close + 1], t[close + 1 :].strip()
        if not (rest.startswith("(") and rest.endswith(")")):
            raise DomainError(f"malformed term {text!r}")
        inner = rest[1:-1]
        groups = _split_top(inner, ";")
        params = head[2:-1]
        if t[0] == "B":
            if len(groups) != 2:
                raise DomainError("B takes the form B[γ](x; y1, ..., yq)")
            g = parse_perm(params)
            ys = [parse_term(p) for p in _split_top(groups[1], ",")]
            return PrimTerm.B(g, parse_term(groups[0]), ys)
        try:
            q, p = (int(v) for v in params.split(","))
        except ValueError:
            raise DomainError(f"bad L parameters {params!r}") from None
        if len(groups) == 2 and q == 0:
            return PrimTerm.L(0, p, [], parse_term(groups[0]), parse_term(groups[1]))
        if len(groups) != 3:
            raise DomainError("L takes the form L[q,p](x1, ..., xq; y; z)")
        xs = [parse_term(s) for s in _split_top(groups[0], ",")] if groups[0] else []
        if len(xs) != q:
            raise DomainError(f"L[{q},{p}] needs {q} x-arguments, got {len(xs)}")
        return PrimTerm.L(q, p, xs, parse_term(groups[1]), parse_term(groups[2]))
    raise DomainError(f"unknown term {text!r}")


def generator(ctx: Algebra, name: str):
    """The basis word of the generator ``name`` in a free context."""
    tag = ctx.tag
    if tag == "mr":
        if name != "x":
            raise DomainError("the permutation algebra has the single generator x")
        return (1,)
    if tag in ("psh", "kw"):
        return ColoredWord((1,) * ctx.theta.degree(name), (name,))
    if tag == "trees":
        return corolla(name, ctx.theta.degree(name) + 1)
    if tag in ("ybin", "dup"):
        if name not in ctx.colors:
            raise DomainError(f"unknown vertex color {name!r}")
        return corolla(name, 2)
    if tag == "twoass":
        if name not in ctx.colors:
            raise DomainError(f"unknown leaf color {name!r}")
        return TensorWord((lleaf(name),))
    raise DomainError(f"terms cannot be evaluated in the {tag} algebra")


def evaluate(term: PrimTerm, ctx: Algebra, primitive_generators: bool = True, check: bool = True) -> Lin:
    """Evaluate a term; generators map to ``e(generator)`` unless told otherwise."""
    memo: dict = {}

    def ev(t: PrimTerm) -> Lin:
        if t in memo:
            return memo[t]
        k = t.kind
        if k == "gen":
            g = Lin({generator(ctx, t.name): 1})
            out = euler_e(ctx, g) if primitive_generators and ctx.has_delta else g
        elif k == "brace":
            out = prd.brace(ctx, ev(t.args[0]), ev(t.args[1]))
        elif k == "B":
            out = brace_B(ctx, t.gamma, ev(t.args[0]), [ev(a) for a in t.args[1:]], check=check)
        elif k == "L":
            vals = [ev(a) for a in t.args]
            out = op_L(ctx, t.q, t.p, vals[:-2], vals[-2], vals[-1])
        elif k == "mu":
            out = op_mu(ctx, [ev(a) for a in t.args])
        else:
            raise DomainError(f"unknown term kind {k!r}")
        memo[t] = out
        return out

    return ev(term)


def _single(d: dict):
    if len(d) != 1:
        raise DomainError("leading word is not a single basis element")
    return next(iter(d))


def leading_word(term: PrimTerm, ctx: Algebra):
    """The basis word obtained by keeping the first term of every operation."""

    def lw(t: PrimTerm):
        k = t.kind
        if k == "gen":
            return generator(ctx, t.name)
        if k == "brace":
            return _single(ctx.top_prod(lw(t.args[0]), lw(t.args[1])))
        if k == "B":
            ws = [lw(a) for a in t.args[1:]]
            y = ws[-1]
            for w in reversed(ws[:-1]):
                y = _single(ctx.zero_prod(w, y))
            return _single(ctx.shuffle(lw(t.args[0]), t.gamma, y))
        if k == "L":
            ws = [lw(a) for a in t.args]
            xs, y, z = ws[:-2], ws[-2], ws[-1]
            shift = sum(ctx.degree(x) for x in xs)
            for w in reversed(xs):
                y = _single(ctx.zero_prod(w, y))
            return _single(ctx.pre(z, t.p + shift, y))
        if k == "mu":
            ws = [lw(a) for a in t.args]
            head = ws[-2] if len(ws) > 2 else ws[-1]
            if len(ws) == 2:
                return _single(ctx.dot_prod(ws[0], ws[1]))
            for w in reversed(ws[:-2]):
                head = _single(ctx.dot_prod(w, head))
            return _single(ctx.zero_prod(head, ws[-1]))
        raise DomainError(f"unknown term kind {k!r}")

    return lw(term)


# ---------------------------------------------------------------------------
# irreducible colored words
# ---------------------------------------------------------------------------

def cw_factorize(w: ColoredWord) -> list[ColoredWord]:
    """Maximal factorisation ``w = w₁∙₀...∙₀w_k`` of a colored surjection word."""
    out: list[ColoredWord] = []
    word = w.word
    start, lo, mx = 0, 0, 0
    for i, v in enumerate(word, 1):
        mx = max(mx, v)
        if i == len(word) or mx < min(word[i:]):
            part = tuple(c - lo for c in word[start:i])
            out.append(ColoredWord(part, w.colors[lo:mx]))
            start, lo = i, mx
    return out


def cw_irreducible(w: ColoredWord) -> bool:
    return len(w.word) > 0 and len(cw_factorize(w)) == 1


def irreducible_words(ctx: Algebra, n: int) -> list[ColoredWord]:
    return [w for w in ctx.basis(n) if cw_irreducible(w)]


def _strip_ones(f: ColoredWord) -> ColoredWord:
    return ColoredWord(tuple(v - 1 for v in f.word if v != 1), f.colors[1:])


def beta_term(f: ColoredWord) -> PrimTerm:
    """The {−,−}/B-expression whose leading word is the irreducible word f."""
    if not cw_irreducible(f):
        raise DomainError(f"{format_word(f.word)} is not irreducible")
    word = f.word
    x = PrimTerm.gen(f.colors[0])
    if all(v == 1 for v in word):
        return x
    n1 = word.count(1)
    gs = cw_factorize(_strip_ones(f))
    r1 = len(gs[0].colors)
    first_one = word.index(1)
    last_g1 = max(i for i, v in enumerate(word) if 2 <= v <= r1 + 1)
    if first_one < last_g1:
        g = shuffle_from_labels([0 if v == 1 else 1 for v in word], (n1, len(word) - n1))
        return PrimTerm.B(g, x, [beta_term(h) for h in gs])
    z = PrimTerm.brace(beta_term(gs[0]), x)
    if len(gs) == 1:
        return z
    m1 = len(gs[0].word)
    g = shuffle_from_labels([0 if v <= r1 + 1 else 1 for v in word], (n1 + m1, len(word) - n1 - m1))
    return PrimTerm.B(g, z, [beta_term(h) for h in gs[1:]])


def beta_inverse(term: PrimTerm, ctx: Algebra) -> ColoredWord:
    return leading_word(term, ctx)


def normal_form_alpha(term: PrimTerm, ctx: Algebra) -> ColoredWord:
    """α: an L-expression over generators to its irreducible K-word."""
    return leading_word(term, ctx)


def alpha_inverse(f: ColoredWord) -> PrimTerm:
    """The L-expression ``L_{m−1}^s(α⁻¹(g₁),...;α⁻¹(g_m); x₁)`` of an irreducible K-word."""
    if not is_kword(f.word) or not cw_irreducible(f):
        raise DomainError(f"{format_word(f.word)} is not an irreducible K-word")
    word = f.word
    x = PrimTerm.gen(f.colors[0])
    if all(v == 1 for v in word):
        return x
    p0 = word.index(1) + 1
    gs = cw_factorize(_strip_ones(f))
    s = p0 - 1 - sum(len(g.word) for g in gs[:-1])
    if not 1 <= s <= len(gs[-1].word):
        raise DomainError(f"{format_word(word)} is not irreducible")
    xs = [alpha_inverse(g) for g in gs[:-1]]
    return PrimTerm.L(len(xs), s, xs, alpha_inverse(gs[-1]), x)


# ---------------------------------------------------------------------------
# explicit bases E_σ and E_θ
# ---------------------------------------------------------------------------

_MR = PermAlgebra()


@lru_cache(maxsize=None)
def _E_sigma(s: Perm) -> Lin:
    n = len(s)
    term = alpha_inverse(ColoredWord(s, ("x",) * n))
    return evaluate(term, _MR)


def E_sigma(s: Sequence[int]) -> Lin:
    """The primitive E_σ of the permutation algebra, for σ irreducible."""
    s = tuple(s)
    if not s or sorted(s) != list(range(1, len(s) + 1)):
        raise DomainError(f"{format_word(s)} is not a permutation")
    if not irr(s):
        raise DomainError(f"{format_word(s)} is reducible")
    return _E_sigma(s)


_PSH: dict[int, ColoredWordAlgebra] = {}


def E_theta(f: ColoredWord | Sequence[int], theta: ThetaTable | None = None, ctx: ColoredWordAlgebra | None = None) -> Lin:
    """The primitive E_θ(f) of K[P∞,X], for f an irreducible colored surjection."""
    if ctx is None:
        theta = theta or default_theta()
        ctx = _PSH.get(id(theta))
        if ctx is None or ctx.theta is not theta:
            ctx = _PSH[id(theta)] = ColoredWordAlgebra(theta)
    if not isinstance(f, ColoredWord):
        from .words import color_word

        f = color_word(tuple(f), ctx.theta)
    memo = _cache(ctx, "_E_theta_cache")
    if f not in memo:
        memo[f] = evaluate(beta_term(f), ctx)
    return memo[f]


# ---------------------------------------------------------------------------
# primitive basis of the free grafting algebra
# ---------------------------------------------------------------------------

def _gr_comp_terms(theta: ThetaTable, n: int, memo: dict) -> dict:
    """Terms of degree n split by shape: 'gen', 'brace' (nested), 'chain'."""
    if n in memo:
        return memo[n]
    gens = [PrimTerm.gen(c) for c in theta.colors_of_degree(n)]
    braces = list(gens)
    for d in range(1, n):
        for c in theta.colors_of_degree(d):
            for w in _gr_comp_terms(theta, n - d, memo)["braces"]:
                braces.append(PrimTerm.brace(PrimTerm.gen(c), w))
    # chains x∙_i w encoded as L[0,i](w; x), with weakly decreasing indices
    chains: list[tuple[PrimTerm, int]] = []
    for d in range(1, n):
        for c in theta.colors_of_degree(d):
            sub = _gr_comp_terms(theta, n - d, memo)
            for w in sub["braces"]:
                for i in range(1, n - d):
                    chains.append((PrimTerm.L(0, i, [], w, PrimTerm.gen(c)), i))
            for w, j in sub["chains"]:
                for i in range(j, n - d):
                    chains.append((PrimTerm.L(0, i, [], w, PrimTerm.gen(c)), i))
    res = {"braces": braces, "chains": chains}
    memo[n] = res
    return res


def gr_basis_terms(theta: ThetaTable, n: int) -> list[PrimTerm]:
    """Generators, right-nested braces and decreasing grafting chains of degree n."""
    memo: dict = {}
    res = _gr_comp_terms(theta, n, memo)
    return res["braces"] + [t for t, _ in res["chains"]]


def tree_gamma(term: PrimTerm, ctx: TreeAlgebra) -> Tree:
    """The tree ``⋁_x(|, t¹, ..., t^r)`` attached to a grafting-basis term."""
    return leading_word(term, ctx)
