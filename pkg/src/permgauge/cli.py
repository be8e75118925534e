"""Command-line front end.

    permgauge build   EXPR
    permgauge fusion  EXPR [--format json|dot|text] [--out PATH] [--graph LABEL]
    permgauge compare EXPR1 EXPR2
    permgauge check   EXPR

Data goes to stdout, errors to stderr as JSON. Exit status: 0 success,
1 mathematical failure, 2 usage error.
"""
from __future__ import annotations

import argparse
import json
import sys

import numpy as np

from .errors import ExprError, GaugeError, MathError
from .expr import Gauge2, evaluate, parse
from .gauge import Diag, Hat, PermutationGauging, gauged_dim
from .modular import INT_TOL, ValidationReport, dims, validate_modular, verlinde
from .ringtools import DEFAULT_BUDGET, export_ring, fp_dims, ring_isomorphism, validate_ring


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message)


def _build(text, tol):
    """``(ModularData, None)`` or ``(None, PermutationGauging)``."""
    node = parse(text)
    if isinstance(node, Gauge2):
        return None, PermutationGauging(evaluate(node.expr), tol=tol)
    return evaluate(node), None


def _ring(text, tol):
    md, gauging = _build(text, tol)
    return gauging.fusion() if gauging else verlinde(md, tol)


def gauging_report(g: PermutationGauging) -> ValidationReport:
    """Ring axioms plus the checks specific to a permutation gauging."""
    rep = ValidationReport()
    ring = g.fusion(validate=False)
    for c in validate_ring(ring).checks:
        rep.checks.append(c)
    rep.add("case 3 = P-matrix formula", ring == g.fusion(validate=False, p_matrix=True))
    d = dims(g.md)
    fp = fp_dims(ring)
    target = 4 * np.sum(d**2) ** 2
    rep.add("sum fpdim^2 = 4 D^2", abs(np.sum(fp**2) - target) <= 1e-4 * target)
    expected = np.array([gauged_dim(g.md, lab) for lab in g.labels])
    rep.add("fpdims match 2 d_x d_y, d_x^2, d_x sqrt(D)", np.allclose(fp, expected, rtol=1e-6))
    u = g.md.unit
    minus = g.index(Diag(u, -1))
    ok = all(
        ring.n[minus, g.index(Hat(x, e))].tolist() == [int(i == g.index(Hat(x, -e))) for i in range(ring.rank)]
        for x in range(g.md.rank)
        for e in (1, -1)
    )
    rep.add("[1;1]- (x) X^e = X^-e", ok)
    return rep


def cmd_build(args, out):
    md, g = _build(args.expr, args.tol)
    if g is not None:
        ring = g.fusion(validate=False)
        rep = validate_ring(ring)
        print(f"rank {ring.rank}: gauged fusion ring", file=out)
    else:
        rep = validate_modular(md, int_tol=args.tol)
        print(f"rank {md.rank}: {' '.join(md.labels)}", file=out)
    print(rep, file=out)
    return 0 if rep.ok else 1


def cmd_fusion(args, out):
    md, g = _build(args.expr, args.tol)
    ring = g.fusion() if g else verlinde(md, args.tol)
    fmt = args.format
    label = args.graph
    if label is not None and fmt != "dot":
        fmt = "dot"
    if fmt == "dot" and label is None:
        if g is None:
            raise _UsageError("--format dot needs --graph LABEL")
        label = g.names[g.index(Hat(g.md.unit, 1))]
    doc = export_ring(ring, fmt, label=label)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(doc)
    else:
        out.write(doc)
    return 0


def cmd_compare(args, out):
    a, b = _ring(args.expr1, args.tol), _ring(args.expr2, args.tol)
    f = ring_isomorphism(a, b, budget=args.budget, seed=args.seed)
    doc = {"isomorphic": f is not None, "rank": [a.rank, b.rank]}
    if f is not None:
        doc["permutation"] = {a.labels[i]: b.labels[j] for i, j in enumerate(f)}
    print(json.dumps(doc, ensure_ascii=False, indent=1), file=out)
    return 0


def cmd_check(args, out):
    md, g = _build(args.expr, args.tol)
    base = md if g is None else g.md
    rep = validate_modular(base, int_tol=args.tol)
    ring = verlinde(base, args.tol)
    for c in validate_ring(ring).checks:
        rep.checks.append(c)
    rep.add("S dims = FP dims", np.allclose(dims(base), fp_dims(ring), rtol=1e-6))
    if g is not None:
        for c in gauging_report(g).checks:
            rep.checks.append(type(c)(f"gauged: {c.name}", c.passed, c.detail))
    print(rep, file=out)
    return 0 if rep.ok else 1


def make_parser():
    common = _Parser(add_help=False)
    common.add_argument("--tol", type=float, default=INT_TOL, help="integrality tolerance")
    common.add_argument("--seed", type=int, default=None, help="isomorphism tie-break seed")
    common.add_argument("--budget", type=int, default=DEFAULT_BUDGET, help="isomorphism node budget")

    p = _Parser(prog="permgauge", description="Modular data and Z/2 permutation gauging.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)
    b = sub.add_parser("build", parents=[common], help="construct and validate modular data")
    b.add_argument("expr")
    b.set_defaults(func=cmd_build)
    f = sub.add_parser("fusion", parents=[common], help="export a fusion ring")
    f.add_argument("expr")
    f.add_argument("--format", choices=("json", "dot", "text"), default="json")
    f.add_argument("--out", default=None)
    f.add_argument("--graph", default=None, metavar="LABEL")
    f.set_defaults(func=cmd_fusion)
    c = sub.add_parser("compare", parents=[common], help="test two fusion rings for isomorphism")
    c.add_argument("expr1")
    c.add_argument("expr2")
    c.set_defaults(func=cmd_compare)
    k = sub.add_parser("check", parents=[common], help="run the full invariant suite")
    k.add_argument("expr")
    k.set_defaults(func=cmd_check)
    return p


def _fail(kind, message, code, err):
    print(json.dumps({"error": kind, "message": message, "exit": code}), file=err)
    return code


def main(argv=None, out=None, err=None):
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    try:
        args = make_parser().parse_args(argv)
        return args.func(args, out)
    except _UsageError as exc:
        return _fail("UsageError", str(exc), 2, err)
    except ExprError as exc:
        return _fail(type(exc).__name__, str(exc), 2, err)
    except MathError as exc:
        return _fail(type(exc).__name__, str(exc), 1, err)
    except (GaugeError, ValueError, KeyError) as exc:
        return _fail(type(exc).__name__, str(exc).strip("'\""), 2, err)


if __name__ == "__main__":
    sys.exit(main())
