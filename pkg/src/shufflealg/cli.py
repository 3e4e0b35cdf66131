"""Command-line front end.

Exit codes: 0 on success, 1 for domain errors and failed verification,
2 for usage errors (argparse's own convention).
"""

from __future__ import annotations

import argparse
import json
import sys
import tempfile
from typing import Sequence

from . import products as prd
from .algebra import TAGS, make_algebra
from .boundary import RULES, boundary_basis, complex_report, d_squared_check, weight_basis
from .coproducts import delta, delta_plus
from .lincomb import DomainError, Lin
from .perms import enum_irr, format_word, parse_perm
from .primitives import prim_basis
from .trees import enum_binary, enum_tensor_words, enum_trees
from .verify import SUITES, battery_passed, dims_report, run_suite
from .words import FAMILIES, ThetaTable, default_theta, enum_family
from .words import format_colored_word as _fcw

OPS = ("gamma", "i", "zero", "top", "star", "succ", "prec", "brace")
ENUM_FAMILIES = FAMILIES + ("irreducible", "binary-trees", "trees", "tensor-words")


def _theta(args) -> ThetaTable:
    if args.theta in (None, "default"):
        return default_theta()
    return ThetaTable.load(args.theta)


def _ctx(args):
    colors = tuple(args.colors.split(",")) if getattr(args, "colors", None) else None
    return make_algebra(args.algebra, theta=_theta(args), colors=colors)


def _dump(obj) -> str:
    return json.dumps(obj, indent=2, ensure_ascii=False)


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------

def cmd_enum(args, out) -> int:
    n, fam = args.degree, args.family
    theta = _theta(args)
    if fam in FAMILIES:
        items = enum_family(fam, n)
        text, js = [format_word(w) for w in items], [list(w) for w in items]
    elif fam == "irreducible":
        items = enum_irr(n)
        text, js = [format_word(w) for w in items], [list(w) for w in items]
    elif fam in ("binary-trees", "trees"):
        items = enum_binary(n) if fam == "binary-trees" else enum_trees("all", n, theta.colors_of_degree)
        text, js = [str(t) for t in items], [t.to_json() for t in items]
    elif fam == "tensor-words":
        items = enum_tensor_words(n)
        text, js = [str(t) for t in items], [t.to_json() for t in items]
    else:
        raise DomainError(f"unknown family {fam!r}; expected one of {', '.join(ENUM_FAMILIES)}")
    if args.format == "json":
        out.write(_dump({"family": fam, "degree": n, "count": len(items), "items": js}) + "\n")
    else:
        for line in text:
            out.write(line + "\n")
    return 0


def cmd_mul(args, out) -> int:
    ctx = _ctx(args)
    x, y = ctx.lin(args.lhs), ctx.lin(args.rhs)
    op = args.op
    if op == "gamma":
        if args.gamma is None:
            raise DomainError("--op gamma needs --gamma")
        res = prd.shuffle_mul(ctx, x, parse_perm(args.gamma), y)
    elif op == "i":
        if args.i is None:
            raise DomainError("--op i needs --i")
        res = prd.preshuffle_mul_i(ctx, x, args.i, y)
    else:
        fn = {
            "zero": prd.bullet0,
            "top": prd.bullet_top,
            "star": prd.star,
            "succ": prd.succ,
            "prec": prd.prec,
            "brace": prd.brace,
        }[op]
        res = fn(ctx, x, y)
    if args.format == "json":
        out.write(_dump({"algebra": ctx.tag, "op": op, "result": res.to_json(ctx.key_json)}) + "\n")
    else:
        out.write(ctx.fmt_lin(res) + "\n")
    return 0


def cmd_comul(args, out) -> int:
    ctx = _ctx(args)
    u = ctx.lin(args.elem)
    res = delta_plus(ctx, u) if args.counital else delta(ctx, u)
    if args.format == "json":
        out.write(_dump({"algebra": ctx.tag, "counital": args.counital, "result": res.to_json(ctx.key_json)}) + "\n")
    else:
        out.write(res.to_text(ctx.fmt) + "\n")
    return 0


def cmd_prim(args, out) -> int:
    ctx = _ctx(args)
    pb = prim_basis(ctx, args.degree, args.basis)
    name = "E" if args.basis == "E" else "e"
    if args.format == "json":
        rows = [
            {"label": ctx.key_json(lab), "provenance": prov, "element": el.to_json(ctx.key_json)}
            for lab, prov, el in zip(pb.labels, pb.provenance, pb.elements)
        ]
        out.write(_dump({"algebra": ctx.tag, "degree": args.degree, "basis": args.basis, "dimension": len(pb), "elements": rows}) + "\n")
    else:
        for lab, el in zip(pb.labels, pb.elements):
            out.write(f"{name}[{ctx.fmt(lab)}] = {ctx.fmt_lin(el)}\n")
    return 0


def cmd_boundary(args, out) -> int:
    theta = _theta(args)
    n = args.degree
    status = 0
    with_colors = not theta.single_color_per_degree()

    def format_colored_word(w):
        return _fcw(w, with_colors=with_colors)

    if args.report:
        rep = complex_report(theta, n)
        out.write((_dump(rep.to_json()) if args.format == "json" else rep.to_text()) + "\n")
        status = 0 if rep.square_zero else 1
    if args.check_square:
        ok, wit = d_squared_check(theta, n, rule=args.rule)
        if args.format == "json":
            payload = {"degree": n, "rule": args.rule, "square_zero": ok}
            if wit:
                payload["witness"] = {"word": format_colored_word(wit["word"]), "d2": wit["d2"].to_text(format_colored_word)}
            out.write(_dump(payload) + "\n")
        else:
            out.write(f"d^2 = 0 in degree {n} ({args.rule} sign rule): {'yes' if ok else 'no'}\n")
            if wit:
                out.write(f"  witness {format_colored_word(wit['word'])}: d^2 = {wit['d2'].to_text(format_colored_word)}\n")
        status = status or (0 if ok else 1)
    if not args.report and not args.check_square:
        memo: dict = {}
        rows = []
        for r in range(1, n + 1):
            for w in weight_basis(theta, n, r):
                rows.append((w, Lin(boundary_basis(theta, w, memo, args.rule))))
        if args.format == "json":
            payload = [
                {"word": format_colored_word(w), "boundary": d.to_text(format_colored_word)} for w, d in rows
            ]
            out.write(_dump({"degree": n, "rule": args.rule, "boundaries": payload}) + "\n")
        else:
            for w, d in rows:
                out.write(f"d({format_colored_word(w)}) = {d.to_text(format_colored_word)}\n")
    return status


def cmd_verify(args, out) -> int:
    names = list(SUITES) if args.suite == "all" else [args.suite]
    if args.suite != "all" and args.suite not in SUITES:
        raise DomainError(f"unknown suite {args.suite!r}; expected one of all, {', '.join(SUITES)}")
    reports = []
    for name in names:
        cap = args.max_degree
        if cap is not None and args.suite == "all":
            cap = min(cap, SUITES[name].max_cap)
        reports.append(run_suite(name, cap, args.seed))
    payload = {"reports": [r.to_json(timing=args.timing) for r in reports], "passed": battery_passed(reports)}
    if args.format == "json":
        out.write(_dump(payload) + "\n")
    else:
        for r in reports:
            out.write(r.to_text(timing=args.timing) + "\n")
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(_dump(payload) + "\n")
    if payload["passed"]:
        return 0
    path = args.out
    if not path:
        with tempfile.NamedTemporaryFile("w", suffix=".json", prefix="verify-", delete=False, encoding="utf-8") as fh:
            fh.write(_dump(payload) + "\n")
            path = fh.name
    sys.stderr.write(f"verification failed; report written to {path}\n")
    return 1


def cmd_dims(args, out) -> int:
    rows = dims_report(args.max_degree)
    if args.format == "json":
        out.write(_dump({"max_degree": args.max_degree, "table": rows}) + "\n")
    else:
        out.write("family          n  computed  expected  equal\n")
        for row in rows:
            out.write(f"{row['family']:<15} {row['n']:>2} {row['computed']:>9} {row['expected']:>9}  {'yes' if row['equal'] else 'no'}\n")
    return 0 if all(r["equal"] for r in rows) else 1


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------

def _positive(text: str) -> int:
    try:
        v = int(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"{text!r} is not an integer") from exc
    if v < 1:
        raise argparse.ArgumentTypeError("degree must be at least 1")
    return v


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default=argparse.SUPPRESS, help="output format (default text)")
    common.add_argument("--theta", default=argparse.SUPPRESS, metavar="PATH", help="color coproduct table as JSON, or 'default'")

    p = argparse.ArgumentParser(prog="shufflealg", description="Exact computations in shuffle, preshuffle and grafting bialgebras.")
    p.add_argument("--format", choices=("text", "json"), default="text", help="output format")
    p.add_argument("--theta", default="default", metavar="PATH", help="color coproduct table as JSON, or 'default'")
    sub = p.add_subparsers(dest="command", required=True, metavar="COMMAND")

    s = sub.add_parser("enum", parents=[common], help="list a basis family in one degree")
    s.add_argument("--family", required=True, choices=ENUM_FAMILIES)
    s.add_argument("--degree", required=True, type=_positive)
    s.set_defaults(fn=cmd_enum)

    s = sub.add_parser("mul", parents=[common], help="multiply two elements")
    s.add_argument("--algebra", required=True, choices=TAGS)
    s.add_argument("--op", required=True, choices=OPS)
    s.add_argument("--gamma", help="shuffle in one-line notation, e.g. 1,3,2")
    s.add_argument("--i", type=int, help="index of the preshuffle product")
    s.add_argument("--lhs", required=True)
    s.add_argument("--rhs", required=True)
    s.add_argument("--colors", help="comma-separated color set for dup and twoass")
    s.set_defaults(fn=cmd_mul)

    s = sub.add_parser("comul", parents=[common], help="coproduct of an element")
    s.add_argument("--algebra", required=True, choices=TAGS)
    s.add_argument("--elem", required=True)
    s.add_argument("--counital", action="store_true", help="include the 1⊗x and x⊗1 terms")
    s.add_argument("--colors", help="comma-separated color set for dup and twoass")
    s.set_defaults(fn=cmd_comul)

    s = sub.add_parser("prim", parents=[common], help="a basis of the primitives in one degree")
    s.add_argument("--algebra", required=True, choices=TAGS)
    s.add_argument("--degree", required=True, type=_positive)
    s.add_argument("--basis", choices=("e", "E"), default="e")
    s.add_argument("--colors", help="comma-separated color set for dup and twoass")
    s.set_defaults(fn=cmd_prim)

    s = sub.add_parser("boundary", parents=[common], help="the twisted boundary on colored surjections")
    s.add_argument("--degree", required=True, type=_positive)
    s.add_argument("--check-square", action="store_true", help="check that the boundary squares to zero")
    s.add_argument("--report", action="store_true", help="dimensions, ranks, homology and Euler characteristic")
    s.add_argument("--rule", choices=RULES, default="dimension", help="Leibniz sign rule")
    s.set_defaults(fn=cmd_boundary)

    s = sub.add_parser("verify", parents=[common], help="run a verification suite")
    s.add_argument("--suite", required=True, help=f"one of all, {', '.join(SUITES)}")
    s.add_argument("--max-degree", type=_positive, default=None)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--out", help="also write the JSON report to this path")
    s.add_argument("--timing", action="store_true", help="include wall times (output is then not reproducible)")
    s.set_defaults(fn=cmd_verify)

    s = sub.add_parser("dims", parents=[common], help="primitive dimensions against their closed forms")
    s.add_argument("--max-degree", type=_positive, default=5)
    s.set_defaults(fn=cmd_dims)
    return p


def main(argv: Sequence[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.fn(args, out)
    except DomainError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 1
    except OSError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 1


def entry() -> None:  # pragma: no cover - console script wrapper
    sys.exit(main())


if __name__ == "__main__":  # pragma: no cover
    entry()
