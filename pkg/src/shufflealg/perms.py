"""Permutations, shuffles and their decompositions.

Permutations are plain tuples in one-line notation, ``(σ(1), ..., σ(n))``.
The right action of a permutation on a word is composition of functions,
``(f·σ)(i) = f(σ(i))``, and every product in the package inherits it.

A permutation γ of ``n₁+...+n_r`` letters is an ``(n₁,...,n_r)``-shuffle when
γ⁻¹ is increasing on each block of consecutive values
``{n₁+...+n_{k-1}+1, ..., n₁+...+n_k}``.  Equivalently, the positions holding
values of a given block carry those values in increasing order.  Zero parts
are allowed.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import permutations
from math import factorial
from typing import Iterable, Sequence

from .lincomb import DomainError

Perm = tuple[int, ...]

__all__ = [
    "Perm",
    "identity",
    "epsilon",
    "is_perm",
    "check_perm",
    "inverse",
    "compose",
    "act_right",
    "concat",
    "concat_many",
    "standardize",
    "is_shuffle",
    "check_shuffle",
    "enum_shuffles",
    "shuffle_from_labels",
    "block_labels",
    "coset_decompose",
    "coset_decompose_blocks",
    "diagonal_decompose",
    "blocks_graft",
    "shuffle_from_graft_blocks",
    "blocks_util",
    "shuffle_from_util_blocks",
    "omega",
    "irr",
    "irr_count",
    "irr_factorize",
    "enum_perms",
    "enum_irr",
    "parse_perm",
    "format_word",
]


def identity(n: int) -> Perm:
    return tuple(range(1, n + 1))


def epsilon(n: int, m: int) -> Perm:
    """ε_{n,m} = (n+1, ..., n+m, 1, ..., n)."""
    return tuple(range(n + 1, n + m + 1)) + tuple(range(1, n + 1))


def is_perm(w: Sequence[int]) -> bool:
    return sorted(w) == list(range(1, len(w) + 1))


def check_perm(w: Sequence[int]) -> Perm:
    w = tuple(w)
    if not is_perm(w):
        raise DomainError(f"{format_word(w)} is not a permutation")
    return w


def inverse(s: Perm) -> Perm:
    inv = [0] * len(s)
    for i, v in enumerate(s, 1):
        inv[v - 1] = i
    return tuple(inv)


def act_right(f: Sequence, s: Perm) -> tuple:
    """Return ``f·σ``, i.e. ``i ↦ f(σ(i))``."""
    if len(f) != len(s):
        raise DomainError(f"length mismatch: word of length {len(f)} acted on by S_{len(s)}")
    return tuple(f[v - 1] for v in s)


def compose(a: Perm, b: Perm) -> Perm:
    """Product ``a·b`` of permutations, ``i ↦ a(b(i))``."""
    return act_right(a, b)


def concat(f: Sequence[int], g: Sequence[int], shift: int | None = None) -> tuple[int, ...]:
    """The concatenation ``f×g = (f, g + shift)``.

    ``shift`` defaults to ``max(f)`` (the right choice for permutations and
    surjections).  Parking functions use ``shift = len(f)``.
    """
    if shift is None:
        shift = max(f) if f else 0
    return tuple(f) + tuple(v + shift for v in g)


def concat_many(words: Iterable[Sequence[int]]) -> tuple[int, ...]:
    out: tuple[int, ...] = ()
    for w in words:
        out = concat(out, w)
    return out


def standardize(w: Sequence[int]) -> Perm:
    """The permutation with the same relative order as ``w`` (ties left to right)."""
    order = sorted(range(len(w)), key=lambda i: (w[i], i))
    out = [0] * len(w)
    for rank, i in enumerate(order, 1):
        out[i] = rank
    return tuple(out)


def _offsets(c: Sequence[int]) -> list[int]:
    offs = [0]
    for p in c:
        offs.append(offs[-1] + p)
    return offs


def block_labels(g: Perm, c: Sequence[int]) -> tuple[int, ...]:
    """For each position of ``g``, the index of the value block it falls in."""
    offs = _offsets(c)
    lab = []
    for v in g:
        k = 0
        while v > offs[k + 1]:
            k += 1
        lab.append(k)
    return tuple(lab)


def is_shuffle(g: Sequence[int], c: Sequence[int]) -> bool:
    if any(p < 0 for p in c):
        raise DomainError(f"composition {tuple(c)} has a negative part")
    if len(g) != sum(c):
        raise DomainError(f"length mismatch: |γ| = {len(g)} but the composition sums to {sum(c)}")
    if not is_perm(g):
        return False
    offs = _offsets(c)
    last = [offs[k] for k in range(len(c))]
    for v in g:
        k = 0
        while v > offs[k + 1]:
            k += 1
        if v != last[k] + 1:
            return False
        last[k] = v
    return True


def check_shuffle(g: Sequence[int], c: Sequence[int]) -> Perm:
    g = tuple(g)
    if not is_shuffle(g, c):
        raise DomainError(f"{format_word(g)} is not a shuffle of type {tuple(c)}")
    return g


def shuffle_from_labels(labels: Sequence[int], c: Sequence[int]) -> Perm:
    """The unique shuffle whose positions carry the given block labels."""
    offs = _offsets(c)
    nxt = list(offs[:-1])
    out = []
    for k in labels:
        nxt[k] += 1
        out.append(nxt[k])
    return tuple(out)


@lru_cache(maxsize=None)
def _enum_shuffles(c: tuple[int, ...]) -> tuple[Perm, ...]:
    res: list[Perm] = []
    remaining = list(c)
    labels: list[int] = []
    total = sum(c)

    def rec() -> None:
        if len(labels) == total:
            res.append(shuffle_from_labels(labels, c))
            return
        for k, left in enumerate(remaining):
            if left:
                remaining[k] -= 1
                labels.append(k)
                rec()
                labels.pop()
                remaining[k] += 1

    rec()
    return tuple(sorted(res))


def enum_shuffles(*c: int | Sequence[int]) -> list[Perm]:
    """All shuffles of the given type in lexicographic order.

    Accepts either ``enum_shuffles((2, 1))`` or ``enum_shuffles(2, 1)``.
    """
    if len(c) == 1 and not isinstance(c[0], int):
        comp = tuple(c[0])
    else:
        comp = tuple(c)  # type: ignore[arg-type]
    if any(p < 0 for p in comp):
        raise DomainError(f"composition {comp} has a negative part")
    return list(_enum_shuffles(comp))


def coset_decompose_blocks(s: Perm, c: Sequence[int]) -> tuple[list[Perm], Perm]:
    """Write ``σ = (σ₁×...×σ_r)·γ`` with γ a shuffle of type ``c``."""
    offs = _offsets(c)
    labels = block_labels(s, c)
    g = shuffle_from_labels(labels, c)
    parts = []
    for k in range(len(c)):
        parts.append(tuple(v - offs[k] for v in s if offs[k] < v <= offs[k + 1]))
    return parts, g


def coset_decompose(s: Perm, i: int) -> tuple[Perm, Perm, Perm]:
    """Return ``(σ₁, σ₂, γ)`` with ``σ = (σ₁×σ₂)·γ`` and ``γ ∈ Sh(i, n-i)``."""
    n = len(s)
    if not 0 <= i <= n:
        raise DomainError(f"split index {i} outside 0..{n}")
    (a, b), g = coset_decompose_blocks(s, (i, n - i))
    return a, b, g


def diagonal_decompose(g: Perm, n: int, m: int, r: int) -> tuple[int, int, Perm, Perm]:
    """Split a shuffle at position ``r``.

    Returns ``(n₁, m₁, γ₁, γ₂)`` with n₁+m₁ = r, γ₁ ∈ Sh(n₁,m₁),
    γ₂ ∈ Sh(n-n₁, m-m₁) and
    ``γ = (1_{n₁} × ε_{n-n₁,m₁} × 1_{m-m₁}) · (γ₁ × γ₂)``.
    """
    if len(g) != n + m:
        raise DomainError(f"shuffle of length {len(g)} does not have type ({n},{m})")
    if not 0 <= r <= n + m:
        raise DomainError(f"cut position {r} outside 0..{n + m}")
    n1 = sum(1 for v in g[:r] if v <= n)
    return n1, r - n1, standardize(g[:r]), standardize(g[r:])


def _x_runs(g: Perm, n: int) -> list[tuple[bool, int]]:
    """Runs of the one-line word, as (is_x_slot, length) pairs."""
    runs: list[tuple[bool, int]] = []
    for v in g:
        isx = v <= n
        if runs and runs[-1][0] == isx:
            runs[-1] = (isx, runs[-1][1] + 1)
        else:
            runs.append((isx, 1))
    return runs


def blocks_graft(g: Perm, n: int, m: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Block data ``(n₁..n_r), (m₁..m_{r+1})`` of a shuffle, y-block first.

    The one-line word is ``(n+1..n+m₁, 1..n₁, n+m₁+1..n+m₁+m₂, n₁+1..n₁+n₂, ...)``
    with ``m₁, m_{r+1} ≥ 0`` and all other parts positive.
    """
    check_shuffle(g, (n, m))
    ns: list[int] = []
    ms: list[int] = []
    runs = _x_runs(g, n)
    if not runs or runs[0][0]:
        ms.append(0)
    for isx, ln in runs:
        (ns if isx else ms).append(ln)
    if len(ms) == len(ns):
        ms.append(0)
    return tuple(ns), tuple(ms)


def shuffle_from_graft_blocks(ns: Sequence[int], ms: Sequence[int]) -> Perm:
    if len(ms) != len(ns) + 1:
        raise DomainError("need one more y-block than x-blocks")
    n = sum(ns)
    labels: list[int] = []
    for k, a in enumerate(ns):
        labels += [1] * ms[k] + [0] * a
    labels += [1] * ms[-1]
    return shuffle_from_labels(labels, (n, sum(ms)))


def blocks_util(g: Perm, n: int, m: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Block data ``(n₁..n_r), (m₁..m_r)`` of a shuffle, x-block first.

    ``γ = (1..n₁, n+1..n+m₁, n₁+1..n₁+n₂, ...)`` with ``n₁ ≥ 0``, ``m_r ≥ 0``.
    """
    check_shuffle(g, (n, m))
    ns: list[int] = []
    ms: list[int] = []
    runs = _x_runs(g, n)
    if runs and not runs[0][0]:
        ns.append(0)
    for isx, ln in runs:
        (ns if isx else ms).append(ln)
    if len(ms) < len(ns):
        ms.append(0)
    if not ns:
        ns, ms = [0], [0]
    return tuple(ns), tuple(ms)


def shuffle_from_util_blocks(ns: Sequence[int], ms: Sequence[int]) -> Perm:
    if len(ms) != len(ns):
        raise DomainError("need as many y-blocks as x-blocks")
    labels: list[int] = []
    for a, b in zip(ns, ms):
        labels += [0] * a + [1] * b
    return shuffle_from_labels(labels, (sum(ns), sum(ms)))


def omega(i: int, n: int, m: int) -> Perm:
    """ω_i^{n,m} = ε_{n,i} × 1_{m-i}, an (n,m)-shuffle."""
    if not 0 <= i <= m:
        raise DomainError(f"omega index {i} outside 0..{m}")
    return epsilon(n, i) + tuple(range(n + i + 1, n + m + 1))


def irr(s: Perm) -> bool:
    """True when σ is not a nontrivial concatenation σ₁×σ₂."""
    if not s:
        return False
    mx = 0
    for i, v in enumerate(s[:-1], 1):
        mx = max(mx, v)
        if mx == i:
            return False
    return True


def irr_factorize(s: Perm) -> list[Perm]:
    """The unique maximal factorisation ``σ = σ₁×...×σ_k`` into irreducibles."""
    out: list[Perm] = []
    start = 0
    mx = 0
    for i, v in enumerate(s, 1):
        mx = max(mx, v)
        if mx == i:
            out.append(tuple(w - start for w in s[start:i]))
            start = i
    return out


@lru_cache(maxsize=None)
def irr_count(n: int) -> int:
    """Number of irreducible permutations in S_n (n ≥ 1)."""
    if n < 1:
        return 0
    return factorial(n) - sum(irr_count(i) * factorial(n - i) for i in range(1, n))


def enum_perms(n: int) -> list[Perm]:
    return sorted(permutations(range(1, n + 1)))


def enum_irr(n: int) -> list[Perm]:
    return [s for s in enum_perms(n) if irr(s)]


def parse_perm(text: str) -> tuple[int, ...]:
    """Parse a comma-separated word such as ``"3,1,2"`` (empty text is the empty word)."""
    text = text.strip().strip("()").strip()
    if not text:
        return ()
    try:
        return tuple(int(t) for t in text.split(","))
    except ValueError as exc:
        raise DomainError(f"cannot parse word {text!r}") from exc


def format_word(w: Sequence[int]) -> str:
    return ",".join(str(v) for v in w)
