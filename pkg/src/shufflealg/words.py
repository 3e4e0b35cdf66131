"""Function words, surjections, K-words, parking functions and colored words.

Words are plain integer tuples.  A colored word pairs a surjection ``f`` onto
``{1..r}`` with one color per value, the color of value ``i`` having degree
``|f⁻¹(i)|``.  Colors are strings; the default family has exactly one color
``xi<n>`` in each degree ``n``, together with the coproduct
``Θ(ξ_n) = Σ_{0<i<n} ξ_i ⊗ ξ_{n-i}``.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import product as cartesian
from typing import Iterable, NamedTuple, Sequence

from .lincomb import DomainError, Lin, parse_rational
from .perms import Perm, check_shuffle, format_word, parse_perm, shuffle_from_labels, standardize

__all__ = [
    "FAMILIES",
    "ENUM_CAP",
    "ColoredWord",
    "ThetaTable",
    "default_theta",
    "fibers",
    "pack",
    "is_surjection",
    "is_kword",
    "is_parking",
    "is_prime_parking",
    "classify",
    "monotone_decompose",
    "surjection_from_coset",
    "park",
    "breakpoints",
    "is_prime",
    "prime_factorize",
    "enum_family",
    "enum_surjections",
    "enum_kwords",
    "enum_parking",
    "theta_check",
    "color_word",
    "parse_colored_word",
    "format_colored_word",
]

ENUM_CAP = 9
FAMILIES = ("surjections", "kwords", "parking", "prime-parking", "functions", "permutations")


# ---------------------------------------------------------------------------
# plain words
# ---------------------------------------------------------------------------

def fibers(f: Sequence[int]) -> list[int]:
    """Fiber sizes ``|f⁻¹(1)|, ..., |f⁻¹(max f)|`` (zeros for missing values)."""
    if not f:
        return []
    out = [0] * max(f)
    for v in f:
        out[v - 1] += 1
    return out


def pack(f: Sequence[int]) -> tuple[int, ...]:
    """Replace the values of ``f`` by their ranks among the values used."""
    ranks = {v: i for i, v in enumerate(sorted(set(f)), 1)}
    return tuple(ranks[v] for v in f)


def is_surjection(f: Sequence[int]) -> bool:
    return bool(f) and set(f) == set(range(1, max(f) + 1)) and min(f) >= 1


def is_kword(f: Sequence[int]) -> bool:
    """Equal letters dominate every letter strictly between them."""
    last: dict[int, int] = {}
    for j, v in enumerate(f):
        i = last.get(v)
        if i is not None and any(f[k] > v for k in range(i + 1, j)):
            return False
        last[v] = j
    return True


def is_parking(f: Sequence[int]) -> bool:
    return all(v <= i for i, v in enumerate(sorted(f), 1)) and all(v >= 1 for v in f)


def breakpoints(f: Sequence[int]) -> list[int]:
    """All ``b`` in ``0..n`` with ``|{i : f(i) ≤ b}| = b``."""
    if not is_parking(f):
        raise DomainError(f"{format_word(f)} is not a parking function")
    n = len(f)
    counts = [0] * (n + 1)
    for v in f:
        if v <= n:
            counts[v] += 1
    out = [0]
    acc = 0
    for b in range(1, n + 1):
        acc += counts[b]
        if acc == b:
            out.append(b)
    return out


def is_prime(f: Sequence[int]) -> bool:
    return breakpoints(f) == [0, len(f)] if f else False


def is_prime_parking(f: Sequence[int]) -> bool:
    return is_parking(f) and is_prime(f)


def classify(f: Sequence[int], codomain: int | None = None) -> dict[str, bool]:
    """The five flags of a word.  ``function`` checks the declared codomain."""
    r = codomain if codomain is not None else (max(f) if f else 0)
    parking = is_parking(f)
    return {
        "function": all(1 <= v <= r for v in f),
        "surjective": is_surjection(f) and max(f) == r,
        "kword": is_kword(f),
        "parking": parking,
        "prime": parking and is_prime(f),
    }


def monotone_decompose(f: Sequence[int]) -> tuple[tuple[int, ...], Perm]:
    """``f = f↑·σ_f`` with ``f↑`` sorted and σ_f a shuffle of the fiber sizes."""
    return tuple(sorted(f)), standardize(f)


def surjection_from_coset(c: Sequence[int], d: Perm) -> tuple[int, ...]:
    """The surjection ``ξ_c·δ`` attached to the coset of δ ∈ Sh(c)."""
    check_shuffle(d, c)
    xi = tuple(k for k, p in enumerate(c, 1) for _ in range(p))
    return tuple(xi[v - 1] for v in d)


def park(f: Sequence[int]) -> tuple[int, ...]:
    """The parking function attached to an arbitrary word."""
    if not f:
        return ()
    up, s = monotone_decompose(f)
    p = [1]
    for j in range(1, len(up)):
        p.append(min(p[-1] + up[j] - up[j - 1], j + 1))
    return tuple(p[v - 1] for v in s)


def prime_factorize(f: Sequence[int]) -> tuple[list[tuple[int, ...]], Perm]:
    """``f = (f₁×...×f_k)·σ`` with prime parking ``f_j`` and σ a shuffle.

    Here × is the parking concatenation, which shifts by the length.
    """
    bps = breakpoints(f)
    sizes = [b - a for a, b in zip(bps, bps[1:])]
    labels = []
    for v in f:
        k = 0
        while v > bps[k + 1]:
            k += 1
        labels.append(k)
    parts = [tuple(v - bps[k] for v in f if bps[k] < v <= bps[k + 1]) for k in range(len(sizes))]
    return parts, shuffle_from_labels(labels, sizes)


# ---------------------------------------------------------------------------
# enumeration
# ---------------------------------------------------------------------------

def _check_cap(n: int) -> None:
    if n < 0:
        raise DomainError("degree must be non-negative")
    if n > ENUM_CAP:
        raise DomainError(f"degree {n} exceeds the enumeration cap {ENUM_CAP}")


@lru_cache(maxsize=None)
def enum_surjections(n: int) -> tuple[tuple[int, ...], ...]:
    _check_cap(n)
    if n == 0:
        return ((),)
    res: list[tuple[int, ...]] = []

    def rec(prefix: list[int], mx: int) -> None:
        if len(prefix) == n:
            if set(prefix) == set(range(1, mx + 1)):
                res.append(tuple(prefix))
            return
        remaining = n - len(prefix)
        for v in range(1, mx + remaining + 1):
            prefix.append(v)
            rec(prefix, max(mx, v))
            prefix.pop()

    rec([], 0)
    return tuple(sorted(res))


def enum_kwords(n: int) -> tuple[tuple[int, ...], ...]:
    return tuple(f for f in enum_surjections(n) if is_kword(f))


@lru_cache(maxsize=None)
def enum_parking(n: int) -> tuple[tuple[int, ...], ...]:
    _check_cap(n)
    return tuple(f for f in cartesian(range(1, n + 1), repeat=n) if is_parking(f))


def enum_family(family: str, n: int) -> list[tuple[int, ...]]:
    """All words of a family in degree ``n``, lexicographically sorted."""
    _check_cap(n)
    if family == "surjections":
        return list(enum_surjections(n))
    if family == "kwords":
        return list(enum_kwords(n))
    if family == "parking":
        return list(enum_parking(n))
    if family == "prime-parking":
        return [f for f in enum_parking(n) if is_prime(f)]
    if family == "functions":
        return sorted(cartesian(range(1, n + 1), repeat=n))
    if family == "permutations":
        from .perms import enum_perms

        return enum_perms(n)
    raise DomainError(f"unknown family {family!r}; expected one of {', '.join(FAMILIES)}")


# ---------------------------------------------------------------------------
# colors and Θ
# ---------------------------------------------------------------------------

_XI = re.compile(r"xi(\d+)$")


@dataclass(frozen=True)
class ThetaTable:
    """A graded color family with a reduced coproduct Θ on its span.

    ``theta[x]`` lists the reduced terms ``(x', x'', c)``; both halves have
    positive degree.  The counital coproduct adds ``1⊗x + x⊗1``.  A table
    built by :func:`default_theta` is infinite: every ``xi<n>`` exists.
    """

    colors: dict[str, int] = field(default_factory=dict)
    theta: dict[str, tuple[tuple[str, str, Fraction], ...]] = field(default_factory=dict)
    is_default: bool = False
    name: str = "custom"

    # -- colors -----------------------------------------------------------
    def degree(self, x: str) -> int:
        if self.is_default:
            m = _XI.match(x)
            if m and int(m.group(1)) >= 1:
                return int(m.group(1))
            raise DomainError(f"unknown color {x!r} (the default family is xi1, xi2, ...)")
        try:
            return self.colors[x]
        except KeyError:
            raise DomainError(f"unknown color {x!r}") from None

    def colors_of_degree(self, n: int) -> list[str]:
        if n < 1:
            return []
        if self.is_default:
            return [f"xi{n}"]
        return sorted(c for c, d in self.colors.items() if d == n)

    def single_color_per_degree(self) -> bool:
        if self.is_default:
            return True
        degs = list(self.colors.values())
        return len(degs) == len(set(degs))

    # -- coproduct --------------------------------------------------------
    def reduced(self, x: str) -> tuple[tuple[str, str, Fraction], ...]:
        if self.is_default:
            n = self.degree(x)
            return tuple((f"xi{i}", f"xi{n - i}", Fraction(1)) for i in range(1, n))
        self.degree(x)
        return self.theta.get(x, ())

    def split(self, x: str, a: int) -> list[tuple[str | None, str | None, Fraction]]:
        """Terms of the counital Θ₊(x) whose left half has degree ``a``.

        ``None`` stands for the unit (a degree-0 half).
        """
        n = self.degree(x)
        if a == 0:
            return [(None, x, Fraction(1))]
        if a == n:
            return [(x, None, Fraction(1))]
        return [(l, r, c) for l, r, c in self.reduced(x) if self.degree(l) == a]

    def iterated(self, x: str, k: int) -> list[tuple[tuple[str, ...], Fraction]]:
        """The k-fold iterated reduced Θ (k tensor factors), ``k ≥ 1``."""
        if k == 1:
            return [((x,), Fraction(1))]
        acc: dict[tuple[str, ...], Fraction] = {}
        for l, r, c in self.reduced(x):
            for rest, c2 in self.iterated(r, k - 1):
                key = (l,) + rest
                acc[key] = acc.get(key, 0) + c * c2
        return [(k_, v) for k_, v in acc.items() if v]

    def all_colors(self, cap: int) -> list[str]:
        out: list[str] = []
        for n in range(1, cap + 1):
            out += self.colors_of_degree(n)
        return out

    # -- serialization ----------------------------------------------------
    @classmethod
    def from_json(cls, data: dict | str) -> "ThetaTable":
        if isinstance(data, str):
            data = json.loads(data)
        try:
            colors = {c["name"]: int(c["degree"]) for c in data.get("colors", [])}
        except (KeyError, TypeError, ValueError) as exc:
            raise DomainError(f"malformed color list: {exc}") from exc
        for name, d in colors.items():
            if d < 1:
                raise DomainError(f"color {name!r} has degree {d}; colors of degree 0 are not allowed")
        theta: dict[str, tuple] = {}
        for entry in data.get("theta", []):
            on = entry["on"]
            if on not in colors:
                raise DomainError(f"theta given on unknown color {on!r}")
            terms = []
            for t in entry.get("terms", []):
                l, r, c = t["l"], t["r"], parse_rational(str(t.get("c", "1")))
                for side in (l, r):
                    if side not in colors:
                        raise DomainError(f"theta term uses unknown color {side!r}")
                if colors[l] + colors[r] != colors[on]:
                    raise DomainError(f"theta({on}) term {l}⊗{r} is not homogeneous")
                if c:
                    terms.append((l, r, c))
            theta[on] = tuple(terms)
        return cls(colors=colors, theta=theta, is_default=False, name="custom")

    @classmethod
    def load(cls, path: str) -> "ThetaTable":
        if path == "default":
            return default_theta()
        try:
            with open(path, encoding="utf-8") as fh:
                return cls.from_json(json.load(fh))
        except OSError as exc:
            raise DomainError(f"cannot read theta table {path!r}: {exc}") from exc

    @classmethod
    def single(cls, name: str = "x", degree: int = 1) -> "ThetaTable":
        """One color with Θ = 0."""
        return cls(colors={name: degree}, theta={}, name=f"single-{name}")

    @classmethod
    def set_colors(cls, names: Iterable[str], degree: int = 1) -> "ThetaTable":
        """A set of colors of one degree, all primitive."""
        return cls(colors={n: degree for n in names}, theta={}, name="set")

    def to_json(self, cap: int = 8) -> dict:
        names = self.all_colors(cap) if self.is_default else sorted(self.colors, key=lambda c: (self.colors[c], c))
        return {
            "colors": [{"name": c, "degree": self.degree(c)} for c in names],
            "theta": [
                {"on": c, "terms": [{"l": l, "r": r, "c": str(v)} for l, r, v in self.reduced(c)]}
                for c in names
                if self.reduced(c)
            ],
        }


@lru_cache(maxsize=None)
def default_theta() -> ThetaTable:
    return ThetaTable(is_default=True, name="default")


def theta_check(t: ThetaTable, cap: int = 8) -> tuple[bool, dict | None]:
    """Check coassociativity of the reduced Θ on every color of degree ≤ cap.

    Returns ``(ok, witness)``; the witness names the first failing color and
    both association orders.
    """
    for x in t.all_colors(cap):
        left: dict[tuple[str, str, str], Fraction] = {}
        right: dict[tuple[str, str, str], Fraction] = {}
        for l, r, c in t.reduced(x):
            for ll, lr, c2 in t.reduced(l):
                k = (ll, lr, r)
                left[k] = left.get(k, 0) + c * c2
            for rl, rr, c2 in t.reduced(r):
                k = (l, rl, rr)
                right[k] = right.get(k, 0) + c * c2
        lv, rv = Lin(left), Lin(right)
        if lv != rv:
            fmt = lambda k: "⊗".join(k)  # noqa: E731
            return False, {
                "color": x,
                "theta_id": lv.to_text(fmt),
                "id_theta": rv.to_text(fmt),
            }
    return True, None


# ---------------------------------------------------------------------------
# colored words
# ---------------------------------------------------------------------------

class ColoredWord(NamedTuple):
    """A surjection word together with one color per value."""

    word: tuple[int, ...]
    colors: tuple[str, ...]

    @property
    def degree(self) -> int:
        return len(self.word)

    @property
    def weight(self) -> int:
        return len(self.colors)

    def canon(self) -> tuple:
        return (len(self.word), self.word, self.colors)

    def __str__(self) -> str:
        return format_colored_word(self)


def color_word(f: Sequence[int], theta: ThetaTable | None = None, colors: Sequence[str] | None = None) -> ColoredWord:
    """Attach colors to a surjection, defaulting to ``xi<fiber size>``."""
    f = tuple(f)
    if f and not is_surjection(f):
        raise DomainError(f"{format_word(f)} is not a surjection")
    fb = fibers(f)
    if colors is None:
        if theta is not None and not theta.is_default:
            chosen = []
            for d in fb:
                opts = theta.colors_of_degree(d)
                if len(opts) != 1:
                    raise DomainError(
                        f"no unique color of degree {d}; give colors explicitly (f=...; colors=...)"
                    )
                chosen.append(opts[0])
            colors = chosen
        else:
            colors = [f"xi{d}" for d in fb]
    colors = tuple(colors)
    if len(colors) != len(fb):
        raise DomainError(f"{format_word(f)} needs {len(fb)} colors, got {len(colors)}")
    if theta is not None:
        for d, c in zip(fb, colors):
            if theta.degree(c) != d:
                raise DomainError(f"color {c} has degree {theta.degree(c)} but its fiber has size {d}")
    return ColoredWord(f, colors)


def parse_colored_word(text: str, theta: ThetaTable | None = None) -> ColoredWord:
    """Parse ``"2,1,1"`` or ``"f=2,1,1; colors=xi1,xi2"``."""
    text = text.strip()
    if "=" not in text:
        return color_word(parse_perm(text), theta)
    parts = dict(p.split("=", 1) for p in (s.strip() for s in text.split(";")) if p)
    if "f" not in parts:
        raise DomainError(f"colored word {text!r} has no f= part")
    f = parse_perm(parts["f"])
    colors = [c.strip() for c in parts.get("colors", "").split(",") if c.strip()] if "colors" in parts else None
    return color_word(f, theta, colors)


def format_colored_word(w: ColoredWord, with_colors: bool = True) -> str:
    if not with_colors:
        return format_word(w.word)
    return f"f={format_word(w.word)}; colors={','.join(w.colors)}"
