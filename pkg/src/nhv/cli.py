"""Command-line front end.

Every subcommand produces a Report printed as text or JSON.  Exit status is
0 for pass/info, 1 for fail and 2 for usage errors.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from nhv import derivations as dv
from nhv import ennilhecke as nh
from nhv import ktheory as kt
from nhv import pcomplex as pc
from nhv import sl2rep
from nhv.coeff_rings import is_prime
from nhv.extpoly import IndexOutOfRange
from nhv.parser import ContextError, ExprSyntaxError, parse_expr, parse_scalar
from nhv.report import Report


class UsageError(Exception):
    pass


def degree_bound(flag: int | None, default: int) -> int:
    if flag is not None:
        return flag
    env = os.environ.get("NHV_DEGREE_BOUND")
    if env:
        try:
            return int(env)
        except ValueError:
            raise UsageError(f"NHV_DEGREE_BOUND must be an integer, got {env!r}")
    return default


def _check_n(n: int) -> None:
    if n < 1:
        raise UsageError("n must be at least 1")


def _check_p(p: int | None, n: int | None = None) -> None:
    if p is None:
        return
    if p < 3 or not is_prime(p):
        raise UsageError(f"p must be an odd prime, got {p}")
    if n is not None and n >= p:
        raise UsageError(f"need n < p for F_p arithmetic (n={n}, p={p})")


# ---------------------------------------------------------------------------
# subcommands


def cmd_relations(a) -> Report:
    _check_n(a.n)
    _check_p(a.p, a.n)
    return nh.verify_relations(a.n, degree_bound(a.degree, 12), a.p or 0)


def cmd_alpha(a) -> Report:
    _check_n(a.n)
    return dv.alpha_table(a.n)


def cmd_apply(a) -> Report:
    _check_n(a.n)
    _check_p(a.p, a.n)
    mod = a.p or 0
    f = parse_expr(a.expr, a.n, "ring", mod)
    try:
        spec = dv.get_spec(a.op, a.n)
    except (ValueError, IndexError) as e:
        raise UsageError(str(e))
    out = spec.power(f, a.power)
    rep = Report("apply", {"op": a.op, "n": a.n, "expr": a.expr, "power": a.power, "p": a.p},
                 informational=True)
    label = spec.name if a.power == 1 else f"{spec.name}^{a.power}"
    rep.add(f"{label}({f.to_text()})", out, out)
    return rep.finish()


def cmd_mul(a) -> Report:
    _check_n(a.n)
    _check_p(a.p, a.n)
    mod = a.p or 0
    lhs = parse_expr(a.lhs, a.n, "algebra", mod)
    rhs = parse_expr(a.rhs, a.n, "algebra", mod)
    prod = lhs * rhs
    rep = Report("mul", {"n": a.n, "lhs": a.lhs, "rhs": a.rhs, "p": a.p}, informational=True)
    rep.add(f"({lhs.to_text()})*({rhs.to_text()})", prod, prod)
    return rep.finish()


def cmd_epsilon(a) -> Report:
    _check_n(a.n)
    rep = nh.epsilon_check(a.n)
    rep.params["value"] = nh.epsilon(a.n).to_text()
    return rep


def cmd_nilpotency(a) -> Report:
    _check_n(a.n)
    _check_p(a.p, a.n)
    rep = Report("nilpotency", {"p": a.p, "n": a.n, "a": a.a})
    rep.extend(dv.nilpotency_check(a.p, a.n), prefix="R_n: ")
    rep.extend(nh.an_nilpotency_check(a.p, a.n, a.a), prefix="A_n: ")
    return rep.finish()


def cmd_k0(a) -> Report:
    _check_p(a.p)
    rep = Report("k0", {"p": a.p, "check": a.check})
    if a.check in ("relations", "all"):
        rep.extend(kt.verify_uqsl2(a.p, "K0"), prefix="relations: ")
    if a.check in ("iso", "all"):
        rep.extend(kt.verify_iso(a.p), prefix="iso: ")
    if a.check in ("eclass", "all"):
        for n in range(1, a.p):
            rep.extend(kt.categorified_E_class(n, a.p)[1], prefix=f"eclass n={n}: ")
    if a.check == "rescaled":
        rep = kt.rescaled_relation_report(a.p)
    return rep.finish()


def cmd_verma(a) -> Report:
    _check_p(a.p)
    hw = parse_scalar(a.hw, a.p) if a.hw else None
    rep = kt.verify_uqsl2(a.p, "Verma", hw)
    rep.params["hw"] = a.hw or "l*q^-1"
    return rep


def cmd_pcomplex(a) -> Report:
    _check_p(a.p)
    if a.action == "blocks":
        if not a.input:
            raise UsageError("pcomplex blocks needs --input FILE")
        try:
            data = json.loads(Path(a.input).read_text())
            c = pc.GradedPComplex.from_json(data, a.p)
        except (OSError, KeyError, ValueError, TypeError) as e:
            raise UsageError(f"cannot read complex: {e}")
        rep = Report("pcomplex", {"p": a.p, "input": a.input})
        nil = pc.verify_p_nilpotent(c)
        rep.expect("d^p = 0", nil)
        if nil:
            blocks = pc.jordan_blocks(c)
            for b in blocks:
                rep.add(f"block q={b.q} lambda={b.lam} parity={b.parity}", f"size {b.size}", f"size {b.size}")
            rep.add("K0 symbol", pc.k0_symbol(blocks, a.p), pc.k0_symbol(blocks, a.p))
            rebuilt = pc.from_blocks(a.p, blocks, c.mod)
            rep.add("blocks reproduce the graded ranks", pc.graded_ranks(rebuilt) == pc.graded_ranks(c), True)
        return rep.finish()
    ws = pc.weighted_shift_blocks(a.p, a.weight, a.count, a.q0, a.lam0, a.parity)
    rep = ws.report
    rep.add("leading block symbol", ws.leading_symbol, ws.leading_symbol)
    return rep


def cmd_filtration(a) -> Report:
    _check_n(a.n)
    D = degree_bound(a.degree, 10)
    ms = range(a.n + 1) if a.m is None else [a.m]
    rep = Report("filtration", {"n": a.n, "m": a.m, "D": D, "algebra": a.algebra})
    for m in ms:
        if not 0 <= m <= a.n:
            raise UsageError("need 0 <= m <= n")
        if a.algebra in ("no", "both"):
            rep.extend(sl2rep.filtration_check(a.n, m, D), prefix=f"R_n m={m}: ")
        if a.algebra in ("yes", "both"):
            rep.extend(sl2rep.an_filtration_check(a.n, m, D), prefix=f"A_n m={m}: ")
    return rep.finish()


def cmd_conjecture(a) -> Report:
    _check_n(a.n)
    if a.n not in (2, 3):
        raise UsageError("the scanner supports n = 2 and n = 3")
    rep = sl2rep.conjecture_scan(a.n, a.mmax, degree_bound(a.degree, 10))
    return rep


def cmd_suite(a) -> Report:
    from nhv import suite

    numbers = [int(x) for x in a.only.split(",")] if a.only else None
    rep = Report("suite", {"only": a.only})
    for c, r in suite.run_suite(numbers):
        rep.add(f"criterion {c.number:02d} {c.title}", "pass" if r.passed else "fail", "pass",
                detail=f"{len(r.checks)} checks, {r.timing_ms / 1000:.2f} s"
                + (f", first failure: {r.failures()[0].name}" if not r.passed else ""))
    return rep.finish()


# ---------------------------------------------------------------------------
# argument parsing


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="nhv", description="Exact verification engine for the enhanced nilHecke algebra.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--out", help="write the report to this file")
    sub = ap.add_subparsers(dest="command", required=True)

    s = sub.add_parser("relations", parents=[common], help="defining relations of A_n")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--p", type=int)
    s.add_argument("--degree", type=int)
    s.set_defaults(fn=cmd_relations)

    s = sub.add_parser("alpha", parents=[common], help="alpha_{i,j} and d_n on the w's")
    s.add_argument("--n", type=int, required=True)
    s.set_defaults(fn=cmd_alpha)

    s = sub.add_parser("apply", parents=[common], help="apply a derivation to an element of R_n")
    s.add_argument("--op", required=True, help="dn, partial:r, witt:k, e, f, h, degq, sln-e:i, sln-f:i, sln-h:i")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--expr", required=True)
    s.add_argument("--power", type=int, default=1)
    s.add_argument("--p", type=int)
    s.set_defaults(fn=cmd_apply)

    s = sub.add_parser("mul", parents=[common], help="product in A_n")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--lhs", required=True)
    s.add_argument("--rhs", required=True)
    s.add_argument("--p", type=int)
    s.set_defaults(fn=cmd_mul)

    s = sub.add_parser("epsilon", parents=[common], help="the idempotent of A_n")
    s.add_argument("--n", type=int, required=True)
    s.set_defaults(fn=cmd_epsilon)

    s = sub.add_parser("nilpotency", parents=[common], help="d^p = 0 on generators")
    s.add_argument("--p", type=int, required=True)
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--a", type=int, default=1)
    s.set_defaults(fn=cmd_nilpotency)

    s = sub.add_parser("k0", parents=[common], help="Grothendieck group model")
    s.add_argument("--p", type=int, required=True)
    s.add_argument("--check", choices=("relations", "iso", "eclass", "rescaled", "all"), default="all")
    s.set_defaults(fn=cmd_k0)

    s = sub.add_parser("verma", parents=[common], help="baby Verma module relations")
    s.add_argument("--p", type=int, required=True)
    s.add_argument("--hw", help="highest weight, e.g. 'l*q^-1' (default)")
    s.set_defaults(fn=cmd_verma)

    s = sub.add_parser("pcomplex", parents=[common], help="Jordan blocks of a graded p-complex")
    s.add_argument("action", choices=("blocks", "shift"))
    s.add_argument("--p", type=int, required=True)
    s.add_argument("--input")
    s.add_argument("--weight", type=int, default=0)
    s.add_argument("--count", type=int)
    s.add_argument("--q0", type=int, default=0)
    s.add_argument("--lam0", type=int, default=0)
    s.add_argument("--parity", type=int, choices=(0, 1), default=0)
    s.set_defaults(fn=cmd_pcomplex)

    s = sub.add_parser("filtration", parents=[common], help="omega filtrations of R_n and A_n")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--m", type=int)
    s.add_argument("--degree", type=int)
    s.add_argument("--algebra", choices=("no", "yes", "both"), default="no")
    s.set_defaults(fn=cmd_filtration)

    s = sub.add_parser("conjecture", parents=[common], help="sl_n decomposition scanner")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--mmax", type=int, default=8)
    s.add_argument("--degree", type=int)
    s.set_defaults(fn=cmd_conjecture)

    s = sub.add_parser("suite", parents=[common], help="run the acceptance battery")
    s.add_argument("--only", help="comma separated criterion numbers")
    s.set_defaults(fn=cmd_suite)
    return ap


def main_report(argv: list[str]) -> Report:
    """Parse arguments and return the report (raises on usage errors)."""
    args = build_parser().parse_args(argv)
    return args.fn(args)


def main(argv: list[str] | None = None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0) and 2
    try:
        rep = args.fn(args)
    except (UsageError, ExprSyntaxError, ContextError, IndexOutOfRange) as e:
        print(f"nhv {args.command}: error: {e}", file=sys.stderr)
        return 2
    text = rep.to_json() if args.format == "json" else rep.to_text()
    if args.out:
        Path(args.out).write_text(text + "\n")
    else:
        print(text)
    return 0 if rep.status in ("pass", "info") else 1


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
