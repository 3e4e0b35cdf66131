"""The Θ-twisted boundary on the free shuffle algebra K[P∞,X].

A colored surjection word ``w`` with colors ``(c₁,...,c_r)`` factors uniquely
as ``(ξ_{n₁};c₁)∙_γ w'`` where ``w'`` carries the values 2..r.  The boundary is
fixed by its value on generators,

    ∂(x) = Σ_{Θ(x)} Σ_{σ∈Sh(n₁,n−n₁)} (−1)^{n₁} sgn(σ) x₍₁₎∙_σ x₍₂₎,

and a graded Leibniz rule ``∂(x∙_γy) = ∂(x)∙_γy + s(x) x∙_γ∂(y)``.

The sign ``s`` must be multiplicative along ∙_γ-factorisations, otherwise the
value depends on how a word is factored.  The default rule ``"dimension"``
uses ``s(x) = (−1)^{|x|−w(x)}``, the cell dimension; on a generator this is
``−(−1)^{|x|}``.  The rule ``"weight"`` is ``s(x) = −(−1)^{w(x)}``, kept for
comparison: it is not multiplicative and ∂∘∂ fails from degree 4 on.

The weight w (number of colors) goes up by one, so on the default family the
weight-r piece of degree n is spanned by the (n−r)-dimensional faces of the
permutohedron and ∂ maps r-colored words to (r+1)-colored words.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .lincomb import DomainError, Lin, linear_extend, rank
from .perms import enum_shuffles, shuffle_from_labels
from .products import cw_shuffle
from .words import ColoredWord, ThetaTable, default_theta, enum_surjections, fibers

__all__ = [
    "BOUNDARY_CAP",
    "sign",
    "boundary",
    "boundary_basis",
    "boundary_alt",
    "RULES",
    "d_squared_check",
    "weight_basis",
    "ComplexReport",
    "complex_report",
]

BOUNDARY_CAP = 7


def sign(p) -> int:
    """Ordinary permutation sign, by cycle counting."""
    seen = [False] * len(p)
    s = 1
    for i in range(len(p)):
        if seen[i]:
            continue
        j, length = i, 0
        while not seen[j]:
            seen[j] = True
            j = p[j] - 1
            length += 1
        if length % 2 == 0:
            s = -s
    return s


def _gen(x: str, n: int) -> ColoredWord:
    return ColoredWord((1,) * n, (x,))


def _boundary_gen(theta: ThetaTable, x: str) -> dict:
    n = theta.degree(x)
    acc: dict = {}
    for a, b, c in theta.reduced(x):
        n1 = theta.degree(a)
        left, right = _gen(a, n1), _gen(b, n - n1)
        for s in enum_shuffles((n1, n - n1)):
            k = cw_shuffle(left, s, right)
            acc[k] = acc.get(k, 0) + c * (-1) ** n1 * sign(s)
    return acc


def _split_first(w: ColoredWord):
    """``w = (ξ_{n₁};c₁)∙_γ w'`` with w' on the values 2..r."""
    word = w.word
    n1 = word.count(1)
    g = shuffle_from_labels([0 if v == 1 else 1 for v in word], (n1, len(word) - n1))
    rest = ColoredWord(tuple(v - 1 for v in word if v != 1), w.colors[1:])
    return _gen(w.colors[0], n1), g, rest


def _split_last(w: ColoredWord):
    """``w = w'∙_γ(ξ_{n_r};c_r)`` with w' on the values 1..r−1."""
    word, r = w.word, len(w.colors)
    nr = word.count(r)
    g = shuffle_from_labels([1 if v == r else 0 for v in word], (len(word) - nr, nr))
    rest = ColoredWord(tuple(v for v in word if v != r), w.colors[:-1])
    return rest, g, _gen(w.colors[-1], nr)


def _shuffle_lin(u: dict, g, v: dict) -> dict:
    acc: dict = {}
    for a, c1 in u.items():
        for b, c2 in v.items():
            k = cw_shuffle(a, g, b)
            acc[k] = acc.get(k, 0) + c1 * c2
    return acc


def _combine(d1: dict, d2: dict, s2: int) -> dict:
    acc = dict(d1)
    for k, c in d2.items():
        acc[k] = acc.get(k, 0) + s2 * c
    return {k: c for k, c in acc.items() if c}


RULES = ("dimension", "weight", "corrupt")


def _leibniz(rule: str, x: ColoredWord) -> int:
    if rule == "dimension":
        return (-1) ** (len(x.word) - len(x.colors))
    if rule == "weight":
        return -((-1) ** len(x.colors))
    if rule == "corrupt":
        return -((-1) ** (len(x.word) - len(x.colors)))
    raise DomainError(f"unknown sign rule {rule!r}; expected one of {', '.join(RULES)}")


def boundary_basis(theta: ThetaTable, w: ColoredWord, memo: dict | None = None, rule: str = "dimension") -> dict:
    """∂ of a basis word, peeling off the value-1 generator."""
    if memo is not None and w in memo:
        return memo[w]
    if not w.word:
        return {}
    if len(w.colors) == 1:
        res = _boundary_gen(theta, w.colors[0])
    else:
        x, g, rest = _split_first(w)
        dx = _shuffle_lin(_boundary_gen(theta, x.colors[0]), g, {rest: 1})
        dy = _shuffle_lin({x: 1}, g, boundary_basis(theta, rest, memo, rule))
        res = _combine(dx, dy, _leibniz(rule, x))
    if memo is not None:
        memo[w] = res
    return res


def boundary_alt(theta: ThetaTable, w: ColoredWord, rule: str = "dimension") -> dict:
    """∂ of a basis word through the other factorisation ``w'∙_γ(ξ;c_r)``."""
    if len(w.colors) <= 1:
        return boundary_basis(theta, w, rule=rule) if w.word else {}
    rest, g, y = _split_last(w)
    dx = _shuffle_lin(boundary_alt(theta, rest, rule), g, {y: 1})
    dy = _shuffle_lin({rest: 1}, g, _boundary_gen(theta, y.colors[0]))
    return _combine(dx, dy, _leibniz(rule, rest))


_MEMO: dict[int, tuple[ThetaTable, dict]] = {}


def _memo_for(theta: ThetaTable) -> dict:
    hit = _MEMO.get(id(theta))
    if hit is None or hit[0] is not theta:
        hit = _MEMO[id(theta)] = (theta, {})
    return hit[1]


def boundary(theta: ThetaTable | None, u: Lin) -> Lin:
    """The boundary ∂_Θ of a linear combination of colored surjection words."""
    theta = theta or default_theta()
    memo = _memo_for(theta)
    for k in u:
        if not isinstance(k, ColoredWord):
            raise DomainError(f"{k!r} is not a colored word")
    return linear_extend(lambda k: boundary_basis(theta, k, memo), u)


def weight_basis(theta: ThetaTable, n: int, r: int) -> list[ColoredWord]:
    """Colored surjection words of degree n and weight r."""
    from itertools import product

    out = []
    for f in enum_surjections(n):
        if max(f, default=0) != r:
            continue
        opts = [theta.colors_of_degree(d) for d in fibers(f)]
        out += [ColoredWord(f, tuple(cs)) for cs in product(*opts)]
    return out


def d_squared_check(theta: ThetaTable | None, n: int, rule: str = "dimension", cap: int = BOUNDARY_CAP):
    """``(True, None)`` when ∂∘∂ vanishes on all degree-n words, else ``(False, witness)``."""
    theta = theta or default_theta()
    if n > cap:
        raise DomainError(f"degree {n} exceeds the cap {cap}")
    memo: dict = {}
    for r in range(1, n + 1):
        for w in weight_basis(theta, n, r):
            d1 = boundary_basis(theta, w, memo, rule)
            acc: dict = {}
            for k, c in d1.items():
                for k2, c2 in boundary_basis(theta, k, memo, rule).items():
                    acc[k2] = acc.get(k2, 0) + c * c2
            acc = {k: c for k, c in acc.items() if c}
            if acc:
                return False, {"word": w, "d2": Lin(acc)}
    return True, None


@dataclass
class ComplexReport:
    n: int
    dims: list[int]
    ranks: list[int]
    euler: Fraction
    betti: list[int]
    square_zero: bool

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "weights": [{"r": r, "dim": d} for r, d in enumerate(self.dims, 1)],
            "ranks": self.ranks,
            "euler": str(self.euler),
            "betti": [{"r": r, "dim": b} for r, b in enumerate(self.betti, 1)],
            "square_zero": self.square_zero,
            "convention": "boundary raises the weight r by one; euler = sum over r of (-1)^(n-r) dim",
        }

    def to_text(self) -> str:
        lines = [f"degree {self.n}"]
        for r, (d, b) in enumerate(zip(self.dims, self.betti), 1):
            rk = self.ranks[r - 1] if r <= len(self.ranks) else 0
            lines.append(f"  weight {r}: dim {d}, rank of boundary {rk}, homology {b}")
        lines.append(f"  euler characteristic {self.euler}")
        lines.append(f"  boundary squares to zero: {'yes' if self.square_zero else 'no'}")
        return "\n".join(lines)


def complex_report(theta: ThetaTable | None, n: int, cap: int = BOUNDARY_CAP) -> ComplexReport:
    """Per-weight dimensions, boundary ranks, homology and Euler characteristic."""
    theta = theta or default_theta()
    if n < 1:
        raise DomainError("degree must be positive")
    if n > cap:
        raise DomainError(f"degree {n} exceeds the cap {cap}")
    memo = _memo_for(theta)
    bases = [weight_basis(theta, n, r) for r in range(1, n + 1)]
    dims = [len(b) for b in bases]
    ranks = [rank(Lin(boundary_basis(theta, w, memo)) for w in b) for b in bases[:-1]]
    ranks.append(0)
    euler = Fraction(sum((-1) ** (n - r) * d for r, d in enumerate(dims, 1)))
    betti = []
    for i, d in enumerate(dims):
        incoming = ranks[i - 1] if i > 0 else 0
        betti.append(d - ranks[i] - incoming)
    ok, _ = d_squared_check(theta, n, cap=cap)
    return ComplexReport(n, dims, ranks[:-1], euler, betti, ok)
