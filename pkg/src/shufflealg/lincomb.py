"""Exact sparse linear combinations.

Every algebra in this package is spanned by a set of canonically encoded basis
words (tuples of integers, colored words, trees, tensor words).  A :class:`Lin`
is a finite map ``basis -> Fraction`` with zero coefficients never stored.
Tensors of basis elements are plain tuples of basis keys, so coproduct values
are ordinary :class:`Lin` objects whose keys are tuples; :class:`TensorElem`
only adds a couple of conveniences on top.
"""

from __future__ import annotations

import heapq
from fractions import Fraction
from itertools import product as _cartesian
from typing import Any, Callable, Hashable, Iterable, Iterator, Mapping

Rational = Fraction
Coeff = int | Fraction

__all__ = [
    "DomainError",
    "Rational",
    "Lin",
    "TensorElem",
    "canon",
    "degree_of",
    "lin_combine",
    "bilinear_extend",
    "linear_extend",
    "multilinear_extend",
    "graded_component",
    "tensor",
    "parse_rational",
    "rank",
    "echelon_basis",
]


class DomainError(ValueError):
    """Raised when an operation is applied outside its mathematical domain."""


def parse_rational(text: str | int | Fraction) -> Fraction:
    if isinstance(text, Fraction):
        return text
    if isinstance(text, int):
        return Fraction(text)
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise DomainError(f"not an exact rational: {text!r}") from exc


def canon(key: Any) -> tuple:
    """Sort key giving the canonical (length-prefixed, lexicographic) order."""
    c = getattr(key, "canon", None)
    if c is not None:
        return c()
    if isinstance(key, tuple):
        if all(isinstance(a, int) for a in key):
            return (len(key),) + key
        # tensor of basis keys
        return tuple(canon(k) for k in key)
    if isinstance(key, str):
        return (len(key), key)
    if isinstance(key, int):
        return (key,)
    raise TypeError(f"no canonical encoding for {key!r}")


def degree_of(key: Any) -> int:
    """Default degree of a basis key: its ``degree`` attribute, else its length."""
    d = getattr(key, "degree", None)
    if d is not None:
        return d
    return len(key)


class Lin(Mapping):
    """Finite formal linear combination with exact rational coefficients.

    Values are treated as immutable.  Arithmetic returns new objects.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[Hashable, Coeff] | Iterable[tuple[Hashable, Coeff]] | None = None):
        acc: dict[Hashable, Fraction] = {}
        if terms is not None:
            items = terms.items() if isinstance(terms, Mapping) else terms
            for k, c in items:
                if c:
                    acc[k] = acc.get(k, 0) + Fraction(c)
        self._terms = {k: c for k, c in acc.items() if c != 0}

    # -- construction ---------------------------------------------------
    @classmethod
    def basis(cls, key: Hashable, coeff: Coeff = 1) -> "Lin":
        return cls({key: coeff})

    @classmethod
    def zero(cls) -> "Lin":
        return cls()

    @classmethod
    def _raw(cls, terms: dict) -> "Lin":
        obj = cls.__new__(cls)
        obj._terms = terms
        return obj

    # -- Mapping protocol -----------------------------------------------
    def __getitem__(self, key):
        return self._terms[key]

    def __iter__(self) -> Iterator:
        return iter(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def coeff(self, key) -> Fraction:
        return self._terms.get(key, Fraction(0))

    def sorted_items(self) -> list[tuple[Any, Fraction]]:
        return sorted(self._terms.items(), key=lambda kv: canon(kv[0]))

    def support(self) -> list:
        return [k for k, _ in self.sorted_items()]

    # -- arithmetic -------------------------------------------------------
    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, Lin):
            return self._terms == other._terms
        if other == 0:
            return not self._terms
        return NotImplemented

    def __ne__(self, other) -> bool:
        r = self.__eq__(other)
        return r if r is NotImplemented else not r

    __hash__ = None  # mutable-looking mapping; do not hash

    def __add__(self, other: "Lin") -> "Lin":
        if not isinstance(other, Lin):
            if other == 0:
                return self
            return NotImplemented
        return lin_combine(1, self, 1, other)

    __radd__ = __add__

    def __sub__(self, other: "Lin") -> "Lin":
        if not isinstance(other, Lin):
            if other == 0:
                return self
            return NotImplemented
        return lin_combine(1, self, -1, other)

    def __neg__(self) -> "Lin":
        return type(self)._raw({k: -c for k, c in self._terms.items()})

    def __mul__(self, scalar: Coeff) -> "Lin":
        if isinstance(scalar, (int, Fraction)):
            return self.scale(scalar)
        return NotImplemented

    __rmul__ = __mul__

    def scale(self, scalar: Coeff) -> "Lin":
        s = Fraction(scalar)
        if s == 0:
            return type(self)()
        return type(self)._raw({k: c * s for k, c in self._terms.items()})

    def map_keys(self, f: Callable[[Any], Any]) -> "Lin":
        """Apply a basis bijection (or any basis map; collisions are summed)."""
        return Lin((f(k), c) for k, c in self._terms.items())

    def degrees(self, deg: Callable[[Any], int] = degree_of) -> set[int]:
        return {deg(k) for k in self._terms}

    def is_homogeneous(self, deg: Callable[[Any], int] = degree_of) -> bool:
        return len(self.degrees(deg)) <= 1

    # -- display ------------------------------------------------------------
    def to_text(self, fmt: Callable[[Any], str] = str) -> str:
        if not self._terms:
            return "0"
        parts: list[str] = []
        for k, c in self.sorted_items():
            word = fmt(k)
            if c == 1:
                body = word
            elif c == -1:
                body = "-" + word
            else:
                body = f"{c}*{word}"
            if parts and not body.startswith("-"):
                parts.append("+ " + body)
            elif parts:
                parts.append("- " + body[1:])
            else:
                parts.append(body)
        return " ".join(parts)

    def to_json(self, word_json: Callable[[Any], Any]) -> dict:
        return {"terms": [{"coeff": str(c), "word": word_json(k)} for k, c in self.sorted_items()]}

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self.to_text()})"


class TensorElem(Lin):
    """A :class:`Lin` whose keys are equal-length tuples of basis keys."""

    __slots__ = ()

    def arity(self) -> int | None:
        for k in self._terms:
            return len(k)
        return None

    def to_json(self, word_json: Callable[[Any], Any]) -> dict:  # type: ignore[override]
        return {
            "terms": [
                {"coeff": str(c), "factors": [word_json(f) for f in k]} for k, c in self.sorted_items()
            ]
        }

    def to_text(self, fmt: Callable[[Any], str] = str) -> str:  # type: ignore[override]
        return Lin.to_text(self, lambda k: " ⊗ ".join(fmt(f) for f in k))


def lin_combine(a: Coeff, u: Lin, b: Coeff, v: Lin) -> Lin:
    """Return ``a*u + b*v`` with zero terms dropped."""
    a, b = Fraction(a), Fraction(b)
    acc: dict = {}
    if a:
        for k, c in u._terms.items():
            acc[k] = c * a
    if b:
        for k, c in v._terms.items():
            acc[k] = acc.get(k, 0) + c * b
    cls = TensorElem if isinstance(u, TensorElem) or isinstance(v, TensorElem) else Lin
    return cls._raw({k: c for k, c in acc.items() if c != 0})


def linear_extend(op: Callable[[Any], Lin | Mapping], u: Lin, cls: type = Lin) -> Lin:
    """Extend a basis map ``op`` linearly to ``u``."""
    acc: dict = {}
    for k, c in u._terms.items():
        for k2, c2 in op(k).items():
            acc[k2] = acc.get(k2, 0) + c * c2
    return cls._raw({k: c for k, c in acc.items() if c != 0})


def bilinear_extend(op: Callable[[Any, Any], Lin | Mapping], u: Lin, v: Lin, cls: type = Lin) -> Lin:
    """Extend a basis-level binary operation bilinearly.

    Domain errors raised by ``op`` are re-raised with the offending pair.
    """
    acc: dict = {}
    for k1, c1 in u._terms.items():
        for k2, c2 in v._terms.items():
            try:
                res = op(k1, k2)
            except DomainError as exc:
                raise DomainError(f"{exc} (on pair {k1!r}, {k2!r})") from exc
            c = c1 * c2
            for k, c3 in res.items():
                acc[k] = acc.get(k, 0) + c * c3
    return cls._raw({k: c for k, c in acc.items() if c != 0})


def multilinear_extend(op: Callable[..., Lin | Mapping], *args: Lin, cls: type = Lin) -> Lin:
    acc: dict = {}
    for combo in _cartesian(*(a.sorted_items() for a in args)):
        c = Fraction(1)
        for _, ci in combo:
            c *= ci
        for k, c3 in op(*(k for k, _ in combo)).items():
            acc[k] = acc.get(k, 0) + c * c3
    return cls._raw({k: c for k, c in acc.items() if c != 0})


def graded_component(u: Lin, n: int, deg: Callable[[Any], int] = degree_of) -> Lin:
    return type(u)._raw({k: c for k, c in u._terms.items() if deg(k) == n})


def tensor(*factors: Lin) -> TensorElem:
    """Tensor product of linear combinations (keys become tuples)."""
    acc: dict = {}
    for combo in _cartesian(*(f._terms.items() for f in factors)):
        key = tuple(k for k, _ in combo)
        c = Fraction(1)
        for _, ci in combo:
            c *= ci
        acc[key] = acc.get(key, 0) + c
    return TensorElem._raw({k: c for k, c in acc.items() if c != 0})


# ---------------------------------------------------------------------------
# exact linear algebra
# ---------------------------------------------------------------------------

def _reduce(vec: dict, pivots: dict) -> dict:
    """Reduce ``vec`` against echelon rows; ``pivots`` maps pivot index -> row.

    Keys are integer column indices; each row's pivot is its smallest index,
    so eliminating in increasing order only ever creates larger indices.
    """
    vec = dict(vec)
    heap = list(vec)
    heapq.heapify(heap)
    while heap:
        k = heapq.heappop(heap)
        c = vec.get(k)
        if c is None:
            continue
        row = pivots.get(k)
        if row is None:
            continue
        f = c / row[k]
        for k2, c2 in row.items():
            old = vec.get(k2)
            v = (old or 0) - f * c2
            if v:
                vec[k2] = v
                if old is None:
                    heapq.heappush(heap, k2)
            else:
                vec.pop(k2, None)
    return vec


def echelon_basis(vectors: Iterable[Lin]) -> list[int]:
    """Indices of a maximal linearly independent subfamily (greedy, in order)."""
    columns: dict = {}
    pivots: dict = {}
    chosen: list[int] = []
    for idx, v in enumerate(vectors):
        row = {columns.setdefault(k, len(columns)): c for k, c in v.items()}
        r = _reduce(row, pivots)
        if r:
            pivots[min(r)] = r
            chosen.append(idx)
    return chosen


def rank(vectors: Iterable[Lin]) -> int:
    """Exact rank over the rationals of a family of linear combinations."""
    return len(echelon_basis(vectors))
