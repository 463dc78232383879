"""
Command-line front end.

Exit codes: 0 success, 1 verification counterexample, 2 usage error,
3 expansion guard exceeded.  ``QGROTH_GUARD`` overrides the default
expansion iteration guard.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from typing import Optional, Sequence

from .exceptions import HypothesisViolation, IterationGuard, QGrothError
from .perm import Permutation, all_perms

EXIT_OK, EXIT_COUNTEREXAMPLE, EXIT_USAGE, EXIT_GUARD = 0, 1, 2, 3

PERM_FAMILIES = ("schubert", "grothendieck", "dual", "qschubert", "qgrothendieck",
                 "double-grothendieck", "qd-schubert", "qd-grothendieck")
PK_FAMILIES = ("E", "F", "Ehat", "G")
TABLE_FAMILIES = ("schubert", "grothendieck", "qschubert", "qgrothendieck")
BASES = ("schubert", "grothendieck", "qschubert", "qgrothendieck")


class UsageError(Exception):
    pass


def _perm(text: str) -> Permutation:
    try:
        w = Permutation.from_string(text)
    except (ValueError, TypeError) as exc:
        raise UsageError(f"bad permutation {text!r}: {exc}") from None
    return w


def _width(n: Optional[int], *perms: Permutation) -> int:
    need = max([2] + [len(w) for w in perms])
    if n is None:
        return need
    if n < need:
        raise UsageError(f"--n {n} is too small for {', '.join(map(str, perms))}")
    return n


def _emit_poly(f, fmt: str, out) -> None:
    if fmt == "json":
        json.dump(f.to_json(), out, sort_keys=True)
        out.write("\n")
    else:
        out.write(str(f) + "\n")


# ---------------------------------------------------------------------------
# compute

def _family_poly(family: str, args, w: Optional[Permutation]):
    from . import classical, double, quantum
    if family in PK_FAMILIES:
        if args.p is None or args.k is None:
            raise UsageError(f"family {family} needs --p and --k")
        variant = args.variant or "plain"
        fn = {"E": lambda p, k, v: quantum.quantum_e(p, k),
              "F": quantum.f_quantum, "Ehat": quantum.hat_e, "G": quantum.g_quantum}[family]
        if family == "E" and variant != "plain":
            raise UsageError("family E has no variants")
        try:
            return fn(args.p, args.k, variant)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
    if w is None:
        raise UsageError(f"family {family} needs --perm")
    n = _width(args.n, w)
    simple = {"schubert": classical.schubert, "grothendieck": classical.grothendieck,
              "qschubert": quantum.quantum_schubert,
              "qgrothendieck": quantum.quantum_grothendieck}
    if family in simple:
        return simple[family](w)
    if family == "dual":
        return classical.dual_grothendieck(w, n)
    return {"double-grothendieck": double.double_grothendieck,
            "qd-schubert": double.qd_schubert,
            "qd-grothendieck": double.qd_grothendieck}[family](w, n)


def cmd_compute(args, out) -> int:
    w = _perm(args.perm) if args.perm else None
    f = _family_poly(args.family, args, w)
    for extra in args.times or []:
        f = f * _family_poly(args.family, args, _perm(extra))
    _emit_poly(f, args.format, out)
    return EXIT_OK


# ---------------------------------------------------------------------------
# expand

def _read_poly(source: str):
    from .poly import Polynomial, parse
    text = sys.stdin.read() if source == "-" else open(source, encoding="utf-8").read()
    try:
        data = json.loads(text)
    except json.JSONDecodeError:
        try:
            return parse(text.strip())
        except ValueError as exc:
            raise UsageError(f"input is neither polynomial JSON nor an expression: {exc}") from None
    try:
        return Polynomial.from_json(data)
    except (KeyError, TypeError, ValueError) as exc:
        raise UsageError(f"malformed polynomial JSON: {exc}") from None


def _expansion_json(exp) -> dict:
    width = max([len(w) for _, w in exp.entries] + [1])
    return exp.to_json(width)


def cmd_expand(args, out) -> int:
    from .classical import expand_grothendieck, expand_schubert
    from .expand import expand_qgrothendieck, expand_qschubert
    f = _read_poly(args.input)
    fn = {"schubert": lambda g, guard: expand_schubert(g),
          "grothendieck": expand_grothendieck,
          "qschubert": expand_qschubert,
          "qgrothendieck": expand_qgrothendieck}[args.basis]
    try:
        exp = fn(f, args.guard)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    json.dump(_expansion_json(exp), out, sort_keys=True)
    out.write("\n")
    return EXIT_OK


# ---------------------------------------------------------------------------
# invariants

def _fmt_d(d) -> str:
    return "(" + (",".join(map(str, d)) or "0") + ")"


def cmd_invariants(args, out) -> int:
    from .expand import gw_invariants, sign_alternation
    u, v = _perm(args.u), _perm(args.v)
    n = _width(args.n, u, v)
    table = gw_invariants(u, v, args.guard)
    report = sign_alternation(table)
    bad = {(w, d) for w, d, _ in report.failures}
    rows = [(w.to_string(n), _fmt_d(d), val, "fail" if (w, d) in bad else "pass")
            for (w, d), val in table.rows()]
    if args.format == "json":
        json.dump({"u": u.to_string(n), "v": v.to_string(n), "conjectural": True,
                   "note": table.note, "sign_check": "pass" if report.passed else "fail",
                   "rows": [{"w": w, "d": d, "N": val, "sign": s} for w, d, val, s in rows]},
                  out, sort_keys=True)
        out.write("\n")
    else:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["w", "d", "N", "sign", "conjectural"])
        for row in rows:
            writer.writerow(list(row) + ["true"])
        out.write(buf.getvalue())
    return EXIT_OK


# ---------------------------------------------------------------------------
# verify

def cmd_verify(args, out) -> int:
    from .verify import run_identity
    try:
        rep = run_identity(args.identity, args.n, p=args.p, k=args.k,
                           kind=args.kind, reading=args.reading)
    except HypothesisViolation as exc:
        raise UsageError(str(exc)) from None
    if args.format == "json":
        json.dump(rep.to_json(), out, sort_keys=True)
        out.write("\n")
    else:
        verdict = "pass" if rep.passed else "FAIL"
        line = f"{rep.identity} n={rep.n}: {verdict} ({len(rep.instances)} checked"
        line += f", {len(rep.failures)} failed)" if rep.failures else ")"
        if rep.conjectural:
            line += f" [conjectural: {rep.note}]"
        out.write(line + "\n")
        if rep.failures:
            first = rep.failures[0]
            out.write(f"counterexample: {json.dumps(first.params, sort_keys=True)}"
                      + (f" {first.detail}" if first.detail else "") + "\n")
    if rep.passed or rep.conjectural:
        return EXIT_OK
    return EXIT_COUNTEREXAMPLE


# ---------------------------------------------------------------------------
# table

def cmd_table(args, out) -> int:
    from .classical import basis_function
    if args.n > args.max_n:
        raise UsageError(f"n={args.n} exceeds the configured maximum {args.max_n} (see --max-n)")
    fn = basis_function(args.family)
    rows = []
    for w in all_perms(args.n):
        f = fn(w)
        rows.append((w.to_string(args.n), len(f), f))
    top = max(r[1] for r in rows)
    attained = [r[0] for r in rows if r[1] == top]
    dump = args.dump
    if args.format == "json":
        data = {"family": args.family, "n": args.n,
                "rows": [dict({"perm": p, "terms": t}, **({"polynomial": str(f)} if dump else {}))
                         for p, t, f in rows]}
        if args.stats:
            data["stats"] = {"max_terms": top, "attained_by": attained,
                             "total_terms": sum(r[1] for r in rows)}
        json.dump(data, out, sort_keys=True)
        out.write("\n")
        return EXIT_OK
    if args.format == "csv" or not args.stats or dump:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["perm", "terms"] + (["polynomial"] if dump else []))
        for p, t, f in rows:
            writer.writerow([p, t] + ([str(f)] if dump else []))
        out.write(buf.getvalue())
    if args.stats and args.format != "csv":
        out.write(f"family={args.family} n={args.n} max terms {top} "
                  f"attained by {' '.join(attained)}\n")
    return EXIT_OK


# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    from .verify import SUITES
    parser = argparse.ArgumentParser(prog="qgroth", description=__doc__.strip().splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    c = sub.add_parser("compute", help="print a polynomial")
    c.add_argument("--family", required=True, choices=PERM_FAMILIES + PK_FAMILIES)
    c.add_argument("--perm")
    c.add_argument("--times", action="append", metavar="PERM",
                   help="multiply by the same family at PERM (repeatable)")
    c.add_argument("--p", type=int)
    c.add_argument("--k", type=int)
    c.add_argument("--n", type=int)
    c.add_argument("--variant", choices=("plain", "bar", "tilde"))
    c.add_argument("--format", choices=("text", "json"), default="text")
    c.set_defaults(func=cmd_compute)

    e = sub.add_parser("expand", help="expand polynomial JSON in a basis")
    e.add_argument("--basis", required=True, choices=BASES)
    e.add_argument("--input", default="-", help="file with polynomial JSON (default stdin)")
    e.add_argument("--guard", type=int)
    e.set_defaults(func=cmd_expand)

    i = sub.add_parser("invariants", help="structure constants of a product (conjectural)")
    i.add_argument("--u", required=True)
    i.add_argument("--v", required=True)
    i.add_argument("--n", type=int)
    i.add_argument("--guard", type=int)
    i.add_argument("--format", choices=("csv", "json"), default="csv")
    i.set_defaults(func=cmd_invariants)

    v = sub.add_parser("verify", help="run an identity suite")
    v.add_argument("--identity", required=True, choices=sorted(SUITES))
    v.add_argument("--n", type=int, default=3)
    v.add_argument("--p", type=int)
    v.add_argument("--k", type=int)
    v.add_argument("--kind")
    v.add_argument("--reading", choices=("distinct", "literal"))
    v.add_argument("--format", choices=("text", "json"), default="text")
    v.set_defaults(func=cmd_verify)

    t = sub.add_parser("table", help="term counts over S_n")
    t.add_argument("--family", required=True, choices=TABLE_FAMILIES)
    t.add_argument("--n", type=int, required=True)
    t.add_argument("--stats", action="store_true")
    t.add_argument("--dump", action="store_true", help="include the polynomials")
    t.add_argument("--max-n", type=int, default=5)
    t.add_argument("--format", choices=("text", "csv", "json"), default="text")
    t.set_defaults(func=cmd_table)
    return parser


def main(argv: Optional[Sequence[str]] = None, out=None) -> int:
    out = sys.stdout if out is None else out
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args, out)
    except UsageError as exc:
        print(f"qgroth: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except IterationGuard as exc:
        print(f"qgroth: {exc}", file=sys.stderr)
        return EXIT_GUARD
    except (OSError, QGrothError) as exc:
        print(f"qgroth: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


__all__ = ["main", "build_parser"]
