"""Verification suites: every law checked over bounded degrees, with JSON reports.

A suite walks its case space in a fixed order, so a report depends only on
``(name, cap, seed)``.  Exhaustive suites also compare the number of cases
against a closed-form count.  Each failing case keeps a witness with both
sides and their difference written out in full.

Suites marked *report-only* never make a battery fail.  They are used for
conventions that are still open.
"""

from __future__ import annotations

import json
import random
import time
from dataclasses import dataclass, field
from itertools import product
from math import comb, factorial
from typing import Any, Callable, Iterable, Sequence

from . import products as prd
from .algebra import Algebra, PermAlgebra, make_algebra
from .boundary import boundary_alt, boundary_basis, weight_basis
from .coproducts import delta, delta_as_basis, delta_as_positional, delta_plus
from .lincomb import DomainError, Lin, TensorElem
from .perms import (
    coset_decompose_blocks,
    compose,
    diagonal_decompose,
    enum_irr,
    enum_perms,
    enum_shuffles,
    epsilon,
    format_word,
    irr_count,
    is_shuffle,
    act_right,
    concat,
)
from .primitives import (
    b_admissible,
    brace_B,
    irreducible_words,
    multiply_back,
    op_L,
    op_mu,
    prim_basis,
    reconstruct,
)
from .trees import catalan, super_catalan
from .words import (
    ThetaTable,
    breakpoints,
    default_theta,
    enum_parking,
    is_parking,
    is_prime_parking,
    park,
    prime_factorize,
)

__all__ = [
    "SCHEMA_VERSION",
    "SUITES",
    "Witness",
    "SuiteReport",
    "run_suite",
    "run_battery",
    "dims_report",
    "corrupted_mr",
]

SCHEMA_VERSION = 1
MAX_WITNESSES = 25


# ---------------------------------------------------------------------------
# reports
# ---------------------------------------------------------------------------

@dataclass
class Witness:
    law: str
    algebra: str
    inputs: dict[str, str]
    lhs: str
    rhs: str
    diff: str

    def to_json(self) -> dict:
        return {
            "law": self.law,
            "algebra": self.algebra,
            "inputs": dict(self.inputs),
            "lhs": self.lhs,
            "rhs": self.rhs,
            "diff": self.diff,
        }


@dataclass
class SuiteReport:
    name: str
    cap: int
    seed: int
    cases: int = 0
    violation_count: int = 0
    violations: list[Witness] = field(default_factory=list)
    counts: dict[str, int] = field(default_factory=dict)
    details: dict[str, Any] = field(default_factory=dict)
    report_only: bool = False
    exhaustive: bool = True
    wall_time: float = 0.0

    @property
    def passed(self) -> bool:
        return self.violation_count == 0

    def to_json(self, timing: bool = True) -> dict:
        out = {
            "schema_version": SCHEMA_VERSION,
            "suite": self.name,
            "cap": self.cap,
            "seed": self.seed,
            "exhaustive": self.exhaustive,
            "report_only": self.report_only,
            "cases": self.cases,
            "passed": self.passed,
            "violation_count": self.violation_count,
            "violations": [w.to_json() for w in self.violations],
            "counts": dict(sorted(self.counts.items())),
            "details": self.details,
        }
        if timing:
            out["wall_time"] = round(self.wall_time, 3)
        return out

    def to_text(self, timing: bool = True) -> str:
        status = "PASS" if self.passed else "FAIL"
        if self.report_only:
            status += " (report only)"
        head = f"{self.name}: {status}, {self.cases} cases, cap {self.cap}"
        lines = [head + (f", {self.wall_time:.2f}s" if timing else "")]
        for key, n in sorted(self.counts.items()):
            lines.append(f"  {key}: {n}")
        for key, val in self.details.items():
            if key == "table":
                for row in val:
                    lines.append("  " + "  ".join(f"{k}={v}" for k, v in row.items()))
            elif key != "algebras":
                lines.append(f"  {key}: {json.dumps(val, sort_keys=True)}")
        for w in self.violations:
            lines.append(f"  violation [{w.algebra}] {w.law}: {json.dumps(w.inputs, sort_keys=True)}")
            lines.append(f"    lhs  = {w.lhs}")
            lines.append(f"    rhs  = {w.rhs}")
            lines.append(f"    diff = {w.diff}")
        if self.violation_count > len(self.violations):
            lines.append(f"  ... {self.violation_count - len(self.violations)} further violations not shown")
        return "\n".join(lines)


def _fmt(ctx: Algebra, v) -> str:
    if isinstance(v, TensorElem):
        return v.to_text(ctx.fmt)
    if isinstance(v, Lin):
        return ctx.fmt_lin(v)
    if isinstance(v, tuple) and all(isinstance(a, int) for a in v):
        return format_word(v)
    try:
        return ctx.fmt(v)
    except Exception:  # noqa: BLE001 - plain values (indices) fall through
        return str(v)


class _Run:
    """Accumulates cases and witnesses for one suite."""

    def __init__(self, report: SuiteReport):
        self.report = report

    def check(self, law: str, ctx: Algebra, inputs: dict, lhs, rhs) -> bool:
        rep = self.report
        rep.cases += 1
        key = f"{ctx.tag}:{law}"
        rep.counts[key] = rep.counts.get(key, 0) + 1
        if not isinstance(lhs, Lin):
            lhs = Lin(lhs)
        if not isinstance(rhs, Lin):
            rhs = Lin(rhs)
        if lhs == rhs:
            return True
        self.fail(law, ctx, inputs, _fmt(ctx, lhs), _fmt(ctx, rhs), _fmt(ctx, lhs - rhs))
        return False

    def check_value(self, law: str, ctx_tag: str, inputs: dict, lhs, rhs) -> bool:
        """Compare plain values (integers, tuples, lists)."""
        rep = self.report
        rep.cases += 1
        key = f"{ctx_tag}:{law}"
        rep.counts[key] = rep.counts.get(key, 0) + 1
        if lhs == rhs:
            return True
        rep.violation_count += 1
        if len(rep.violations) < MAX_WITNESSES:
            rep.violations.append(
                Witness(law, ctx_tag, {k: str(v) for k, v in inputs.items()}, str(lhs), str(rhs), "values differ")
            )
        return False

    def fail(self, law, ctx, inputs, lhs: str, rhs: str, diff: str) -> None:
        rep = self.report
        rep.violation_count += 1
        if len(rep.violations) < MAX_WITNESSES:
            tag = ctx.tag if hasattr(ctx, "tag") else str(ctx)
            shown = {k: _fmt(ctx, v) for k, v in inputs.items()}
            rep.violations.append(Witness(law, tag, shown, lhs, rhs, diff))

    def audit(self, label: str, got: int, expected: int) -> None:
        audits = self.report.details.setdefault("count_audit", {})
        audits[label] = {"cases": got, "expected": expected}
        self.check_value("count-audit", label.split(":")[0], {"what": label}, got, expected)


# ---------------------------------------------------------------------------
# small helpers
# ---------------------------------------------------------------------------

def _I(n: int) -> tuple[int, ...]:
    return tuple(range(1, n + 1))


def _cross(a: Sequence[int], b: Sequence[int]) -> tuple[int, ...]:
    n = len(a)
    return tuple(a) + tuple(v + n for v in b)


def _add(acc: dict, k, c) -> None:
    acc[k] = acc.get(k, 0) + c


def _lin_apply(fn, u: dict) -> dict:
    """Extend a basis map returning dicts linearly over the dict ``u``."""
    acc: dict = {}
    for k, c in u.items():
        for k2, c2 in fn(k).items():
            _add(acc, k2, c * c2)
    return acc


def _compositions(total: int, parts: int) -> Iterable[tuple[int, ...]]:
    if parts == 1:
        if total >= 1:
            yield (total,)
        return
    for first in range(1, total - parts + 2):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def _degree_tuples(cap: int, parts: int) -> list[tuple[int, ...]]:
    out = []
    for total in range(parts, cap + 1):
        out += list(_compositions(total, parts))
    return out


def _contexts(plan: Sequence[tuple[str, int, dict]], cap: int, override) -> list[tuple[Algebra, int]]:
    """Contexts with their effective caps; ``override`` replaces the default list."""
    if override is not None:
        ctxs = override if isinstance(override, (list, tuple)) else [override]
        out = []
        for c in ctxs:
            if isinstance(c, str):
                c = make_algebra(c)
            out.append((c, cap))
        return out
    return [(make_algebra(tag, **kw), min(cap, lim)) for tag, lim, kw in plan]


def _mul_unit(ctx: Algebra, a, g, b) -> dict:
    if ctx.degree(a) == 0:
        return {b: 1}
    if ctx.degree(b) == 0:
        return {a: 1}
    return ctx.shuffle(a, g, b)


def _star_basis(ctx: Algebra, a, b) -> dict:
    n, m = ctx.degree(a), ctx.degree(b)
    if n == 0:
        return {b: 1}
    if m == 0:
        return {a: 1}
    acc: dict = {}
    for g in enum_shuffles((n, m)):
        for k, c in ctx.shuffle(a, g, b).items():
            _add(acc, k, c)
    return acc


class _PrimPool:
    """Seeded random primitive elements of a context."""

    def __init__(self, ctx: Algebra, rng: random.Random):
        self.ctx = ctx
        self.rng = rng
        self._basis: dict[int, list[Lin]] = {}

    def basis(self, d: int) -> list[Lin]:
        if d not in self._basis:
            self._basis[d] = prim_basis(self.ctx, d).elements
        return self._basis[d]

    def draw(self, d: int) -> Lin:
        els = self.basis(d)
        k = min(len(els), self.rng.randint(1, 2))
        picks = self.rng.sample(range(len(els)), k)
        out = Lin()
        for i in picks:
            out = out + els[i] * self.rng.choice((-2, -1, 1, 2))
        return out if out else els[picks[0]]


def _random_elem(ctx: Algebra, d: int, rng: random.Random) -> Lin:
    basis = ctx.basis(d)
    k = min(len(basis), rng.randint(1, 2))
    out = Lin()
    for key in rng.sample(basis, k):
        out = out + Lin({key: rng.choice((-2, -1, 1, 2, 3))})
    return out if out else Lin({basis[0]: 1})


# ---------------------------------------------------------------------------
# shuffle algebra laws
# ---------------------------------------------------------------------------

def matched_pair(n: int, m: int, r: int, d, g):
    """For δ∈Sh(m,r), γ∈Sh(n,m+r) return ``(σ, λ)`` with (1_n×δ)·γ = (σ×1_r)·λ."""
    pi = compose(_cross(_I(n), d), g)
    parts, lam = coset_decompose_blocks(pi, (n + m, r))
    if parts[1] != _I(r) or not is_shuffle(parts[0], (n, m)):
        raise DomainError(f"no matched quadruple for {format_word(d)}, {format_word(g)}")
    return parts[0], lam


def _suite_shuffle_assoc(run: _Run, cap: int, rng, override) -> None:
    plan = [("mr", 6, {}), ("psh", 5, {}), ("pqsym", 5, {}), ("fw", 4, {}), ("ybin", 4, {}), ("trees", 4, {})]
    algebras = {}
    for ctx, c in _contexts(plan, cap, override):
        algebras[ctx.tag] = c
        before = run.report.cases
        expected = 0
        for n, m, r in _degree_tuples(c, 3):
            bn, bm, br = ctx.basis(n), ctx.basis(m), ctx.basis(r)
            expected += len(bn) * len(bm) * len(br) * comb(m + r, m) * comb(n + m + r, n)
            for d in enum_shuffles((m, r)):
                for g in enum_shuffles((n, m + r)):
                    s, lam = matched_pair(n, m, r, d, g)
                    for a, b, z in product(bn, bm, br):
                        inner = ctx.shuffle(b, d, z)
                        lhs = _lin_apply(lambda k: ctx.shuffle(a, g, k), inner)
                        rhs = _lin_apply(lambda k: ctx.shuffle(k, lam, z), ctx.shuffle(a, s, b))
                        run.check(
                            "x.g(y.d z) = (x.s y).l z",
                            ctx,
                            {"x": a, "y": b, "z": z, "gamma": g, "delta": d, "sigma": s, "lambda": lam},
                            lhs,
                            rhs,
                        )
        run.audit(f"{ctx.tag}:cases", run.report.cases - before, expected)
    run.report.details["algebras"] = algebras


def _bialgebra_rhs(ctx: Algebra, a, g, b) -> dict:
    n, m = ctx.degree(a), ctx.degree(b)
    dx = delta_plus(ctx, Lin({a: 1}))
    dy = delta_plus(ctx, Lin({b: 1}))
    acc: dict = {}
    for r in range(1, n + m):
        n1, m1, g1, g2 = diagonal_decompose(g, n, m, r)
        for (x1, x2), c in dx.items():
            if ctx.degree(x1) != n1:
                continue
            for (y1, y2), c2 in dy.items():
                if ctx.degree(y1) != m1:
                    continue
                for k1, e1 in _mul_unit(ctx, x1, g1, y1).items():
                    for k2, e2 in _mul_unit(ctx, x2, g2, y2).items():
                        _add(acc, (k1, k2), c * c2 * e1 * e2)
    return acc


def _suite_shuffle_bialgebra(run: _Run, cap: int, rng, override) -> None:
    plan = [("mr", 5, {}), ("psh", 5, {}), ("pqsym", 5, {}), ("ybin", 5, {}), ("trees", 4, {})]
    algebras = {}
    for ctx, c in _contexts(plan, cap, override):
        algebras[ctx.tag] = c
        for n, m in _degree_tuples(c, 2):
            for a, b in product(ctx.basis(n), ctx.basis(m)):
                for g in enum_shuffles((n, m)):
                    lhs = delta(ctx, Lin(ctx.shuffle(a, g, b)))
                    run.check("D(x.g y)", ctx, {"x": a, "y": b, "gamma": g}, lhs, TensorElem(_bialgebra_rhs(ctx, a, g, b)))
    run.report.details["algebras"] = algebras


def _nui_rhs(ctx: Algebra, prod, a, b) -> dict:
    acc: dict = {}
    for (x1, x2), c in ctx.delta_basis(a).items():
        for k, e in prod(x2, b).items():
            _add(acc, (x1, k), c * e)
    _add(acc, (a, b), 1)
    for (y1, y2), c in ctx.delta_basis(b).items():
        for k, e in prod(a, y1).items():
            _add(acc, (k, y2), c * e)
    return acc


def _suite_nui(run: _Run, cap: int, rng, override) -> None:
    plan = [("mr", 5, {}), ("psh", 5, {}), ("pqsym", 5, {}), ("ybin", 5, {}), ("kw", 5, {}), ("trees", 5, {})]
    algebras = {}
    for ctx, c in _contexts(plan, cap, override):
        algebras[ctx.tag] = c
        for n, m in _degree_tuples(c, 2):
            for a, b in product(ctx.basis(n), ctx.basis(m)):
                for law, prod_ in (("D(x.0 y)", ctx.zero_prod), ("D(x.top y)", ctx.top_prod)):
                    lhs = delta(ctx, Lin(prod_(a, b)))
                    run.check(law, ctx, {"x": a, "y": b}, lhs, TensorElem(_nui_rhs(ctx, prod_, a, b)))
    run.report.details["algebras"] = algebras


def _suite_hopf(run: _Run, cap: int, rng, override) -> None:
    plan = [("mr", 4, {}), ("psh", 4, {}), ("pqsym", 4, {})]
    algebras = {}
    for ctx, c in _contexts(plan, cap, override):
        algebras[ctx.tag] = c
        for n, m in _degree_tuples(c, 2):
            for a, b in product(ctx.basis(n), ctx.basis(m)):
                lhs = delta_plus(ctx, Lin(_star_basis(ctx, a, b)))
                dx, dy = delta_plus(ctx, Lin({a: 1})), delta_plus(ctx, Lin({b: 1}))
                acc: dict = {}
                for (x1, x2), c1 in dx.items():
                    for (y1, y2), c2 in dy.items():
                        for k1, e1 in _star_basis(ctx, x1, y1).items():
                            for k2, e2 in _star_basis(ctx, x2, y2).items():
                                _add(acc, (k1, k2), c1 * c2 * e1 * e2)
                run.check("D+(x*y)", ctx, {"x": a, "y": b}, lhs, TensorElem(acc))
    run.report.details["algebras"] = algebras


def _suite_dendriform(run: _Run, cap: int, rng, override) -> None:
    plan = [("mr", 5, {}), ("psh", 4, {}), ("pqsym", 4, {})]
    algebras = {}
    for ctx, c in _contexts(plan, cap, override):
        algebras[ctx.tag] = c
        P = lambda u, v: prd.prec(ctx, u, v)  # noqa: E731
        S = lambda u, v: prd.succ(ctx, u, v)  # noqa: E731
        T = lambda u, v: prd.star(ctx, u, v)  # noqa: E731
        for n, m in _degree_tuples(c, 2):
            for a, b in product(ctx.basis(n), ctx.basis(m)):
                x, y = Lin({a: 1}), Lin({b: 1})
                run.check("x>y + x<y = x*y", ctx, {"x": a, "y": b}, S(x, y) + P(x, y), T(x, y))
        for n, m, r in _degree_tuples(c, 3):
            for a, b, z in product(ctx.basis(n), ctx.basis(m), ctx.basis(r)):
                x, y, w = Lin({a: 1}), Lin({b: 1}), Lin({z: 1})
                inp = {"x": a, "y": b, "z": z}
                run.check("(x<y)<z = x<(y*z)", ctx, inp, P(P(x, y), w), P(x, T(y, w)))
                run.check("(x>y)<z = x>(y<z)", ctx, inp, P(S(x, y), w), S(x, P(y, w)))
                run.check("(x*y)>z = x>(y>z)", ctx, inp, S(T(x, y), w), S(x, S(y, w)))
    run.report.details["algebras"] = algebras


# ---------------------------------------------------------------------------
# preshuffle, grafting and duplicial laws
# ---------------------------------------------------------------------------

def _presh_bialgebra_rhs(ctx: Algebra, a, i, b) -> dict:
    m = ctx.degree(b)
    dx, dy = ctx.delta_basis(a), ctx.delta_basis(b)
    acc: dict = {}
    if i == 0:
        return _nui_rhs(ctx, ctx.zero_prod, a, b)
    if i < m:
        for (y1, y2), c in dy.items():
            d1 = ctx.degree(y1)
            if d1 <= i:
                for k, e in ctx.pre(a, i - d1, y2).items():
                    _add(acc, (y1, k), c * e)
            if d1 == i:
                for (x1, x2), c2 in dx.items():
                    for k1, e1 in ctx.pre(x1, i, y1).items():
                        for k2, e2 in ctx.pre(x2, 0, y2).items():
                            _add(acc, (k1, k2), c * c2 * e1 * e2)
            if d1 >= i:
                for k, e in ctx.pre(a, i, y1).items():
                    _add(acc, (k, y2), c * e)
        return acc
    for (y1, y2), c in dy.items():
        for k, e in ctx.pre(a, ctx.degree(y2), y2).items():
            _add(acc, (y1, k), c * e)
    _add(acc, (b, a), 1)
    for (x1, x2), c in dx.items():
        for k, e in ctx.pre(x1, m, b).items():
            _add(acc, (k, x2), c * e)
    return acc


def _suite_preshuffle(run: _Run, cap: int, rng, override) -> None:
    plan = [("kw", 5, {}), ("trees", 5, {}), ("mr", 5, {}), ("psh", 4, {}), ("ybin", 5, {}), ("as1", 4, {})]
    algebras = {}
    for ctx, c in _contexts(plan, cap, override):
        algebras[ctx.tag] = c
        for n, m, r in _degree_tuples(c, 3):
            for a, b, z in product(ctx.basis(n), ctx.basis(m), ctx.basis(r)):
                for i in range(m + 1):
                    xy = ctx.pre(a, i, b)
                    for j in range(r + 1):
                        lhs = _lin_apply(lambda k: ctx.pre(k, j, z), xy)
                        rhs = _lin_apply(lambda k: ctx.pre(a, i + j, k), ctx.pre(b, j, z))
                        run.check("(x.i y).j z = x.(i+j)(y.j z)", ctx, {"x": a, "y": b, "z": z, "i": i, "j": j}, lhs, rhs)
        if ctx.tag == "as1":
            continue  # its coproduct is examined by the report-only suite
        for n, m in _degree_tuples(c, 2):
            for a, b in product(ctx.basis(n), ctx.basis(m)):
                for i in range(m + 1):
                    lhs = delta(ctx, Lin(ctx.pre(a, i, b)))
                    run.check("D(x.i y)", ctx, {"x": a, "y": b, "i": i}, lhs, TensorElem(_presh_bialgebra_rhs(ctx, a, i, b)))
    run.report.details["algebras"] = algebras


def _suite_grafting(run: _Run, cap: int, rng, override) -> None:
    plan = [("trees", 5, {}), ("ybin", 5, {}), ("dup", 4, {"colors": ("a", "b")}), ("as1", 4, {})]
    algebras = {}
    for ctx, c in _contexts(plan, cap, override):
        algebras[ctx.tag] = c
        for n, m, r in _degree_tuples(c, 3):
            for a, b, z in product(ctx.basis(n), ctx.basis(m), ctx.basis(r)):
                for j in range(1, r + 1):
                    yz = ctx.pre(b, j, z)
                    for i in range(j):
                        lhs = _lin_apply(lambda k: ctx.pre(a, i, k), yz)
                        rhs = _lin_apply(lambda k: ctx.pre(b, j + n, k), ctx.pre(a, i, z))
                        run.check("x.i(y.j z) = y.(j+|x|)(x.i z)", ctx, {"x": a, "y": b, "z": z, "i": i, "j": j}, lhs, rhs)
    run.report.details["algebras"] = algebras


def _suite_duplicial(run: _Run, cap: int, rng, override) -> None:
    plan = [("ybin", 4, {}), ("dup", 4, {"colors": ("a", "b")})]
    algebras = {}
    for ctx, c in _contexts(plan, cap, override):
        algebras[ctx.tag] = c
        ov = lambda u, v: prd.over(ctx, u, v)  # noqa: E731
        un = lambda u, v: prd.under(ctx, u, v)  # noqa: E731
        for n, m, r in _degree_tuples(c, 3):
            for a, b, z in product(ctx.basis(n), ctx.basis(m), ctx.basis(r)):
                x, y, w = Lin({a: 1}), Lin({b: 1}), Lin({z: 1})
                inp = {"x": a, "y": b, "z": z}
                run.check("x/(y/z) = (x/y)/z", ctx, inp, ov(x, ov(y, w)), ov(ov(x, y), w))
                run.check("x/(y\\z) = (x/y)\\z", ctx, inp, ov(x, un(y, w)), un(ov(x, y), w))
                run.check("x\\(y\\z) = (x\\y)\\z", ctx, inp, un(x, un(y, w)), un(un(x, y), w))
    run.report.details["algebras"] = algebras


def _suite_duplicial_admissible(run: _Run, cap: int, rng, override) -> None:
    plan = [("ybin", 5, {}), ("dup", 4, {"colors": ("a", "b")})]
    algebras = {}
    for ctx, c in _contexts(plan, cap, override):
        algebras[ctx.tag] = c
        for n, m in _degree_tuples(c, 2):
            for a, b in product(ctx.basis(n), ctx.basis(m)):
                for law, prod_ in (("D(x/y)", ctx.zero_prod), ("D(x\\y)", ctx.top_prod)):
                    lhs = delta(ctx, Lin(prod_(a, b)))
                    run.check(law, ctx, {"x": a, "y": b}, lhs, TensorElem(_nui_rhs(ctx, prod_, a, b)))
    run.report.details["algebras"] = algebras


def _reduced_as(fn):
    def red(key):
        return {k: c for k, c in fn(key).items() if len(k[0]) > 1 and len(k[1]) > 1}

    return red


def _suite_as1_bialgebra(run: _Run, cap: int, rng, override) -> None:
    """The preshuffle-bialgebra relations on As[1] with the degree-0 factors dropped.

    The implemented coproduct is checked; the positional reading is only
    tallied in the details.
    """
    c = min(cap, 4)
    alt_fail = 0
    alt_cases = 0
    variants = (("as1", delta_as_basis), ("as1-positional", delta_as_positional))
    for label, fn in variants:
        ctx = make_algebra("as1")
        red = _reduced_as(fn)
        ctx.delta_basis = red  # type: ignore[method-assign]
        for n, m in _degree_tuples(c, 2):
            for a, b in product(ctx.basis(n), ctx.basis(m)):
                for i in range(m + 1):
                    lhs = TensorElem(_lin_apply(red, ctx.pre(a, i, b)))
                    rhs = TensorElem(_presh_bialgebra_rhs(ctx, a, i, b))
                    if label == "as1":
                        run.check("D(x.i y), reduced", ctx, {"x": a, "y": b, "i": i}, lhs, rhs)
                    else:
                        alt_cases += 1
                        alt_fail += lhs != rhs
    run.report.details["algebras"] = {"as1": c}
    run.report.details["positional_reading"] = {"cases": alt_cases, "violations": alt_fail}


# ---------------------------------------------------------------------------
# primitive operations
# ---------------------------------------------------------------------------

def _suite_prim_sh(run: _Run, cap: int, rng, override, samples: int = 60) -> None:
    plan = [("mr", 5, {}), ("psh", 5, {})]
    algebras = {}
    for ctx, c in _contexts(plan, cap, override):
        algebras[ctx.tag] = c
        pool = _PrimPool(ctx, rng)
        br = lambda u, v: prd.brace(ctx, u, v)  # noqa: E731
        B = lambda g, u, v: brace_B(ctx, g, u, [v], check=False)  # noqa: E731
        triples = _degree_tuples(c, 3)
        for _ in range(samples):
            n, m, s = rng.choice(triples)
            x, y, w = pool.draw(n), pool.draw(m), pool.draw(s)
            inp = {"x": x, "y": y, "w": w}
            xw = br(x, w)
            rhs1 = br(br(x, y), w) + B(_cross(_I(n), epsilon(s, m)), xw, y) - B(_cross(epsilon(m, n), _I(s)), y, xw)
            run.check("(1) {x,{y,w}}", ctx, inp, br(x, br(y, w)), rhs1)
            g = rng.choice(enum_shuffles((m, s)))
            gbar = compose(_cross(epsilon(m, n), _I(s)), _cross(_I(n), g))
            rhs2 = B(gbar, y, xw) + B(_cross(_I(n), g), br(x, y), w)
            run.check("(2) {x,B(y;w)}", ctx, dict(inp, gamma=g), br(x, B(g, y, w)), rhs2)
            g = rng.choice(enum_shuffles((n, m)))
            glow = compose(_cross(_I(n), epsilon(s, m)), _cross(g, _I(s)))
            rhs3 = B(glow, xw, y) + B(_cross(g, _I(s)), x, br(y, w))
            run.check("(3) {B(x;y),w}", ctx, dict(inp, gamma=g), br(B(g, x, y), w), rhs3)
            for _attempt in range(20):
                d = rng.choice(enum_shuffles((n, m)))
                g = rng.choice(enum_shuffles((n + m, s)))
                parts, tau = coset_decompose_blocks(compose(_cross(d, _I(s)), g), (n, m + s))
                if parts[0] == _I(n) and parts[1] != _I(m + s):
                    sg = parts[1]
                    lhs4 = B(g, B(d, x, y), w)
                    rhs4 = B(tau, x, B(sg, y, w))
                    run.check("(4) B(B(x;y);w)", ctx, dict(inp, gamma=g, delta=d, sigma=sg, tau=tau), lhs4, rhs4)
                    break
    run.report.details["algebras"] = algebras
    run.report.exhaustive = False


def _suite_prim_gr(run: _Run, cap: int, rng, override, samples: int = 60) -> None:
    plan = [("trees", 5, {}), ("ybin", 5, {})]
    algebras = {}
    for ctx, c in _contexts(plan, cap, override):
        algebras[ctx.tag] = c
        pool = _PrimPool(ctx, rng)
        br = lambda u, v: prd.brace(ctx, u, v)  # noqa: E731
        dot = lambda u, p, v: prd.preshuffle_mul_i(ctx, u, p, v)  # noqa: E731
        triples = _degree_tuples(c, 3)
        for _ in range(samples):
            a, b, cc = rng.choice(triples)
            x, y, z = pool.draw(a), pool.draw(b), pool.draw(cc)
            inp = {"x": x, "y": y, "z": z}
            run.check("(1)", ctx, inp, br(br(x, y), z), br(x, br(y, z)) + dot(y, a, br(x, z)))
            for p in range(1, b):
                run.check("(2)", ctx, dict(inp, p=p), br(dot(x, p, y), z), dot(x, p, br(y, z)))
            for p in range(1, cc):
                run.check("(3)", ctx, dict(inp, p=p), br(x, dot(y, p, z)), dot(y, a + p, br(x, z)))
                run.check("(4)", ctx, dict(inp, p=p), dot(br(x, y), p, z), dot(y, a + p, dot(x, p, z)) - dot(x, p, dot(y, p, z)))
            for p in range(1, b):
                for q in range(1, cc):
                    run.check("(5)", ctx, dict(inp, p=p, q=q), dot(dot(x, p, y), q, z), dot(x, p + q, dot(y, q, z)))
            for p in range(1, cc):
                for q in range(p + 1, cc):
                    run.check("(6)", ctx, dict(inp, p=p, q=q), dot(x, p, dot(y, q, z)), dot(y, a + q, dot(x, p, z)))
    run.report.details["algebras"] = algebras
    run.report.exhaustive = False


def relation_a_sides(ctx: Algebra, xs: Sequence[Lin], y: Lin, w: Lin, t: Lin, j: int, k: int) -> tuple[Lin, Lin]:
    """Both sides of the expansion of ``L_n^j(x; y; L_0^k(w; t))``."""
    deg = lambda u: ctx.degree(next(iter(u)))  # noqa: E731

    def L(q, p, a, b, c):
        # a vanishing intermediate makes the multilinear value vanish
        if not b or not c or not all(a):
            return Lin()
        return op_L(ctx, q, p, a, b, c)

    n = len(xs)
    lhs = L(n, j, xs, y, L(0, k, [], w, t))
    rhs = Lin()
    for r in range(n + 1):
        tail = sum(deg(x) for x in xs[r:])
        rhs = rhs + L(r, j + k + tail, xs[:r], L(n - r, j, xs[r:], y, w), t)
    if j == deg(y):
        rhs = rhs + L(n + 1, k, list(xs) + [y], w, t)
    if k == deg(w):
        for r in range(n + 1):
            tail = sum(deg(x) for x in xs[r:])
            rhs = rhs - L(r, j + tail, xs[:r], L(n - r, j, xs[r:], y, t), w)
    return lhs, rhs


def _suite_prim_psh_a(run: _Run, cap: int, rng, override, samples: int = 120) -> None:
    plan = [("kw", 5, {}), ("trees", 5, {}), ("mr", 5, {})]
    algebras = {}
    for ctx, c in _contexts(plan, cap, override):
        algebras[ctx.tag] = c
        done = 0
        while done < samples:
            n = rng.randint(0, 2)
            degs = [rng.randint(1, 2) for _ in range(n + 3)]
            if sum(degs) > c:
                continue
            xs = [_random_elem(ctx, d, rng) for d in degs[:n]]
            y, w, t = (_random_elem(ctx, d, rng) for d in degs[n:])
            j = rng.randint(1, degs[n])
            k = rng.randint(1, degs[n + 1])
            lhs, rhs = relation_a_sides(ctx, xs, y, w, t, j, k)
            inp = {f"x{i + 1}": x for i, x in enumerate(xs)}
            inp.update({"y": y, "w": w, "t": t, "j": j, "k": k})
            run.check("(a)", ctx, inp, lhs, rhs)
            done += 1
    run.report.details["algebras"] = algebras
    run.report.exhaustive = False


def _suite_closure(run: _Run, cap: int, rng, override, samples: int = 40) -> None:
    """Δ-annihilation of {−,−}, B_q^γ, L_q^p and μ_n on random primitive inputs."""
    c = min(cap, 5)
    zero = TensorElem()
    pools: dict[str, _PrimPool] = {}

    def pool(tag, **kw):
        key = tag + repr(sorted(kw.items()))
        if key not in pools:
            pools[key] = _PrimPool(make_algebra(tag, **kw), rng)
        return pools[key]

    def prim_check(op: str, ctx, inp, value):
        run.check(f"D({op}) = 0", ctx, inp, delta(ctx, value), zero)

    pairs = _degree_tuples(c, 2)
    for tag in ("mr", "psh", "pqsym", "trees", "ybin", "kw"):
        pl = pool(tag)
        for _ in range(samples):
            a, b = rng.choice(pairs)
            x, y = pl.draw(a), pl.draw(b)
            prim_check("brace", pl.ctx, {"x": x, "y": y}, prd.brace(pl.ctx, x, y))
    for tag in ("mr", "psh", "pqsym"):
        pl = pool(tag)
        done = 0
        while done < samples:
            q = rng.randint(1, 2)
            degs = [rng.randint(1, 3) for _ in range(q + 1)]
            if sum(degs) > c:
                continue
            n, ms = degs[0], degs[1:]
            gs = [g for g in enum_shuffles((n, sum(ms))) if b_admissible(g, n, ms)]
            if not gs:
                continue
            g = rng.choice(gs)
            x = pl.draw(n)
            ys = [pl.draw(m) for m in ms]
            inp = {"gamma": g, "x": x}
            inp.update({f"y{i + 1}": yv for i, yv in enumerate(ys)})
            prim_check(f"B_{q}", pl.ctx, inp, brace_B(pl.ctx, g, x, ys))
            done += 1
    for tag in ("kw", "trees", "mr"):
        pl = pool(tag)
        done = 0
        while done < samples:
            q = rng.randint(0, 2)
            degs = [rng.randint(1, 2) for _ in range(q + 2)]
            if sum(degs) > c:
                continue
            xs = [pl.draw(d) for d in degs[:q]]
            y, z = pl.draw(degs[q]), pl.draw(degs[q + 1])
            p = rng.randint(1, degs[q])
            inp = {f"x{i + 1}": xv for i, xv in enumerate(xs)}
            inp.update({"y": y, "z": z, "p": p})
            prim_check(f"L_{q}^{p}", pl.ctx, inp, op_L(pl.ctx, q, p, xs, y, z))
            done += 1
    for colors in (("e",), ("a", "b")):
        pl = pool("twoass", colors=colors)
        done = 0
        while done < samples:
            k = rng.randint(2, 4)
            degs = [rng.randint(1, 2) for _ in range(k)]
            if sum(degs) > c:
                continue
            xs = [pl.draw(d) for d in degs]
            prim_check(f"mu_{k}", pl.ctx, {f"x{i + 1}": xv for i, xv in enumerate(xs)}, op_mu(pl.ctx, xs))
            done += 1
    run.report.details["algebras"] = {"all": c}
    run.report.exhaustive = False


def _suite_cofree(run: _Run, cap: int, rng, override) -> None:
    plan = [("mr", 5, {}), ("psh", 4, {}), ("trees", 4, {})]
    algebras = {}
    for ctx, c in _contexts(plan, cap, override):
        algebras[ctx.tag] = c
        for n in range(1, c + 1):
            for key in ctx.basis(n):
                u = Lin({key: 1})
                parts = reconstruct(ctx, u)
                run.check("x = sum of 0-products of e-parts", ctx, {"x": key}, multiply_back(ctx, parts), u)
    run.report.details["algebras"] = algebras


# ---------------------------------------------------------------------------
# parking functions
# ---------------------------------------------------------------------------

def _suite_park(run: _Run, cap: int, rng, override) -> None:
    c = min(cap, 4)
    tag = "pqsym"
    for n in range(1, c + 1):
        pfs = enum_parking(n)
        perms = enum_perms(n)
        for f in product(range(1, n + 1), repeat=n):
            p = park(f)
            order_ok = all(
                (f[i] < f[j]) == (p[i] < p[j]) and (f[i] == f[j]) == (p[i] == p[j]) for i in range(n) for j in range(n)
            )
            run.check_value("Park preserves value order", tag, {"f": format_word(f)}, order_ok, True)
            run.check_value("Park(f) is parking", tag, {"f": format_word(f)}, is_parking(p), True)
        for f in pfs:
            run.check_value("Park fixes PF_n", tag, {"f": format_word(f)}, park(f), f)
            parts, s = prime_factorize(f)
            whole: tuple[int, ...] = ()
            for part in parts:
                whole = concat(whole, part, len(whole))
            run.check_value("prime factorisation reassembles", tag, {"f": format_word(f)}, act_right(whole, s), f)
            run.check_value("factors are prime", tag, {"f": format_word(f)}, all(is_prime_parking(q) for q in parts), True)
            for g in perms:
                fg = act_right(f, g)
                run.check_value("Park(f.g) = Park(f).g", tag, {"f": format_word(f), "g": format_word(g)}, park(fg), act_right(park(f), g))
                run.check_value("PF_n closed under S_n", tag, {"f": format_word(f), "g": format_word(g)}, is_parking(fg), True)
                run.check_value(
                    "primality invariant under S_n", tag, {"f": format_word(f), "g": format_word(g)},
                    is_prime_parking(fg), is_prime_parking(f),
                )
        for m in range(1, c + 1 - n):
            for f in pfs:
                for g in enum_parking(m):
                    run.check_value(
                        "Park(f x g) = Park(f) x Park(g)", tag, {"f": format_word(f), "g": format_word(g)},
                        park(concat(f, g, n)), concat(park(f), park(g), n),
                    )
    run.report.details["algebras"] = {tag: c}
    run.report.details["breakpoints_example"] = {"1,2": breakpoints((1, 2)), "1,1": breakpoints((1, 1))}


# ---------------------------------------------------------------------------
# dimensions
# ---------------------------------------------------------------------------

def _comp_irr_sum(n: int) -> int:
    total = 0
    for k in range(1, n + 1):
        for comp in _compositions(n, k):
            prod_ = 1
            for p in comp:
                prod_ *= irr_count(p)
            total += prod_
    return total


def dims_report(cap: int = 5) -> list[dict]:
    """Per-degree primitive dimensions next to their closed forms."""
    if cap > 6:
        raise DomainError(f"dims cap {cap} exceeds 6")
    rows: list[dict] = []
    mr = make_algebra("mr")
    for n in range(1, cap + 1):
        rows.append(
            {
                "family": "mr",
                "n": n,
                "computed": len(prim_basis(mr, n)),
                "expected": irr_count(n),
                "brute_force": len(enum_irr(n)),
            }
        )
    for n in range(1, cap + 1):
        rows.append({"family": "compositions", "n": n, "computed": _comp_irr_sum(n), "expected": factorial(n)})
    for colors in (("x",), ("a", "b")):
        dup = make_algebra("dup", colors=colors)
        for n in range(1, min(cap, 5) + 1):
            rows.append(
                {
                    "family": f"dup|E|={len(colors)}",
                    "n": n,
                    "computed": len(prim_basis(dup, n)),
                    "expected": catalan(n - 1) * len(colors) ** n,
                }
            )
    for colors, lim in ((("e",), 5), (("a", "b"), 4)):
        tw = make_algebra("twoass", colors=colors)
        for n in range(1, min(cap, lim) + 1):
            sc = 1 if n == 1 else super_catalan(n - 1)
            rows.append(
                {
                    "family": f"twoass|E|={len(colors)}",
                    "n": n,
                    "computed": len(prim_basis(tw, n)),
                    "expected": sc * len(colors) ** n,
                }
            )
    for tag in ("psh", "kw"):
        ctx = make_algebra(tag)
        for n in range(1, min(cap, 5) + 1):
            rows.append(
                {"family": tag, "n": n, "computed": len(prim_basis(ctx, n)), "expected": len(irreducible_words(ctx, n))}
            )
    trees = make_algebra("trees")
    for n in range(1, min(cap, 5) + 1):
        target = sum(1 for t in trees.basis(n) if t.children and t.children[0].is_leaf)
        rows.append({"family": "trees", "n": n, "computed": len(prim_basis(trees, n)), "expected": target})
    for row in rows:
        row["equal"] = row["computed"] == row["expected"] and row.get("brute_force", row["expected"]) == row["expected"]
    return rows


def _suite_dims(run: _Run, cap: int, rng, override) -> None:
    rows = dims_report(cap)
    for row in rows:
        run.check_value(
            "dimension identity", row["family"], {"n": row["n"]}, row["computed"], row["expected"]
        )
        if "brute_force" in row:
            run.check_value("Irr count by brute force", row["family"], {"n": row["n"]}, row["brute_force"], row["expected"])
    run.report.details["table"] = rows


# ---------------------------------------------------------------------------
# boundary
# ---------------------------------------------------------------------------

def _stirling2(n: int, r: int) -> int:
    return sum((-1) ** i * comb(r, i) * (r - i) ** n for i in range(r + 1)) // factorial(r)


def _suite_boundary(run: _Run, cap: int, rng, override, rule: str = "dimension") -> None:
    c = min(cap, 5)
    thetas: list[tuple[str, ThetaTable, int]] = [("default", default_theta(), c)]
    try:
        thetas.append(("{a,b}", ThetaTable.set_colors(("a", "b")), min(c, 4)))
    except DomainError:  # pragma: no cover - set_colors is always available
        pass
    table = []
    for label, theta, cn in thetas:
        for n in range(1, cn + 1):
            memo: dict = {}
            for r in range(1, n + 1):
                for w in weight_basis(theta, n, r):
                    d1 = boundary_basis(theta, w, memo, rule)
                    acc: dict = {}
                    for k, c1 in d1.items():
                        for k2, c2 in boundary_basis(theta, k, memo, rule).items():
                            _add(acc, k2, c1 * c2)
                    rep = run.report
                    rep.cases += 1
                    key = f"{label}:d(d(w)) = 0"
                    rep.counts[key] = rep.counts.get(key, 0) + 1
                    diff = Lin(acc)
                    if diff:
                        run.fail("d(d(w)) = 0", label, {"w": str(w)}, str(diff.to_text()), "0", diff.to_text())
                    if r < n:
                        alt = Lin(boundary_alt(theta, w, rule))
                        rep.cases += 1
                        key = f"{label}:first and last factorisations agree"
                        rep.counts[key] = rep.counts.get(key, 0) + 1
                        if alt != Lin(d1):
                            run.fail("factorisations agree", label, {"w": str(w)}, Lin(d1).to_text(), alt.to_text(), (Lin(d1) - alt).to_text())
            if label == "default":
                dims = [len(weight_basis(theta, n, r)) for r in range(1, n + 1)]
                faces = [factorial(r) * _stirling2(n, r) for r in range(1, n + 1)]
                euler = sum((-1) ** (n - r) * d for r, d in enumerate(dims, 1))
                run.check_value("weight dims = face counts", "boundary", {"n": n}, dims, faces)
                run.check_value("euler characteristic = 1", "boundary", {"n": n}, euler, 1)
                table.append({"n": n, "dims": dims, "euler": euler})
    run.report.details["table"] = table
    run.report.details["algebras"] = {label: cn for label, _, cn in thetas}
    run.report.details["sign_rule"] = rule


# ---------------------------------------------------------------------------
# registry
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class _Suite:
    fn: Callable
    default_cap: int
    max_cap: int
    report_only: bool = False


SUITES: dict[str, _Suite] = {
    "shuffle-assoc": _Suite(_suite_shuffle_assoc, 6, 7),
    "shuffle-bialgebra": _Suite(_suite_shuffle_bialgebra, 5, 6),
    "nui": _Suite(_suite_nui, 5, 6),
    "hopf": _Suite(_suite_hopf, 4, 5),
    "dendriform": _Suite(_suite_dendriform, 5, 6),
    "preshuffle": _Suite(_suite_preshuffle, 5, 6),
    "grafting": _Suite(_suite_grafting, 5, 6),
    "duplicial": _Suite(_suite_duplicial, 4, 5),
    "prim-sh": _Suite(_suite_prim_sh, 5, 6),
    "prim-gr": _Suite(_suite_prim_gr, 5, 6),
    "prim-psh-a": _Suite(_suite_prim_psh_a, 5, 6),
    "closure": _Suite(_suite_closure, 5, 6),
    "cofree": _Suite(_suite_cofree, 5, 6),
    "park": _Suite(_suite_park, 4, 5),
    "dims": _Suite(_suite_dims, 6, 6),
    "boundary": _Suite(_suite_boundary, 5, 6),
    "as1-bialgebra": _Suite(_suite_as1_bialgebra, 4, 5, report_only=True),
    "duplicial-admissible": _Suite(_suite_duplicial_admissible, 5, 6, report_only=True),
}


def run_suite(name: str, cap: int | None = None, seed: int = 0, algebra=None) -> SuiteReport:
    """Run one suite.  ``algebra`` (a context, tag, or list) replaces its default algebras."""
    suite = SUITES.get(name)
    if suite is None:
        raise DomainError(f"unknown suite {name!r}; expected one of {', '.join(SUITES)}")
    cap = suite.default_cap if cap is None else int(cap)
    if not 1 <= cap <= suite.max_cap:
        raise DomainError(f"cap {cap} for suite {name} outside 1..{suite.max_cap}")
    report = SuiteReport(name=name, cap=cap, seed=seed, report_only=suite.report_only)
    rng = random.Random(f"{name}:{seed}")
    start = time.perf_counter()
    suite.fn(_Run(report), cap, rng, algebra)
    report.wall_time = time.perf_counter() - start
    return report


def run_battery(cap: int | None = None, seed: int = 0) -> list[SuiteReport]:
    """Every suite; a cap above a suite's maximum is clipped to it."""
    out = []
    for name, suite in SUITES.items():
        c = suite.default_cap if cap is None else min(cap, suite.max_cap)
        out.append(run_suite(name, c, seed))
    return out


def battery_passed(reports: Iterable[SuiteReport]) -> bool:
    return all(r.passed for r in reports if not r.report_only)


# ---------------------------------------------------------------------------
# negative controls
# ---------------------------------------------------------------------------

class _CorruptPerm(PermAlgebra):
    """MR with ∙_γ replaced by plain concatenation whenever γ is not the identity."""

    tag = "mr-corrupt"

    def shuffle(self, a, g, b):
        n = len(a)
        if tuple(g) != tuple(range(1, len(g) + 1)) and len(a) + len(b) >= 3:
            return {a + tuple(v + n for v in b): 1}
        return super().shuffle(a, g, b)


def corrupted_mr() -> PermAlgebra:
    """A deliberately broken MR context, used as a negative control."""
    return _CorruptPerm()
