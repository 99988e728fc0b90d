"""Command-line entry point: ``fibhess <command> ...``.

Exit codes separate findings from faults: printed-claim mismatches only fail
the run under ``--strict``; an engine disagreement always does.
"""

from __future__ import annotations

import argparse
import csv
import io
import os
import sys

from fibhess import algebra, claims, oeis, tables
from fibhess.determinants import (
    EngineDisagreement,
    NotHessenbergError,
    cofactor_det,
    det_of_lorentz_product,
    hessenberg_det,
)
from fibhess.matrix import ALL_FAMILIES, SquareMatrix, build, lorentz_mul

EXIT_OK = 0
EXIT_FINDINGS = 1
EXIT_USAGE = 2
EXIT_UNKNOWN = 3
EXIT_RANGE = 4
EXIT_OEIS = 5
EXIT_ENGINE = 6
EXIT_SHAPE = 7


class CliError(Exception):
    def __init__(self, message: str, code: int):
        super().__init__(message)
        self.code = code


def _family(name: str) -> str:
    if name not in ALL_FAMILIES:
        raise CliError(f"unknown family {name!r} (choose from {', '.join(ALL_FAMILIES)})", EXIT_UNKNOWN)
    return name


def _build(family: str, n: int, i=None, mode="allones") -> SquareMatrix:
    _family(family)
    try:
        return build(family, n, i, mode)
    except ValueError as exc:
        raise CliError(str(exc), EXIT_RANGE) from None


def _at_t(value, t):
    if t is None or not isinstance(value, algebra.Poly):
        return value
    return value.eval(t)


def _int_list(text: str) -> list:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def cmd_matrix(args, out):
    m = _build(args.family, args.n, args.i, args.mode)
    if args.format == "json":
        out.write(m.to_json() + "\n")
    elif args.format == "csv":
        w = csv.writer(out, lineterminator="\n")
        for row in m.rows:
            w.writerow([algebra.render(x) for x in row])
    else:
        out.write(m.pretty() + "\n")
    return EXIT_OK


def cmd_det(args, out):
    m = _build(args.family, args.n, args.i, args.mode)
    if args.engine == "cofactor":
        out.write(algebra.render(_at_t(cofactor_det(m), args.t)) + "\n")
        return EXIT_OK
    try:
        hess = hessenberg_det(m)
    except NotHessenbergError:
        raise CliError(f"{args.family}_{args.n} is not lower Hessenberg; use --engine cofactor", EXIT_SHAPE) from None
    if args.engine == "hessenberg":
        out.write(algebra.render(_at_t(hess, args.t)) + "\n")
        return EXIT_OK
    cof = cofactor_det(m)
    out.write(f"hessenberg: {algebra.render(_at_t(hess, args.t))}\n")
    out.write(f"cofactor:   {algebra.render(_at_t(cof, args.t))}\n")
    if hess == cof:
        out.write("MATCH\n")
        return EXIT_OK
    out.write("DIFFER\n")
    return EXIT_ENGINE


def _same_tag(a: SquareMatrix, b: SquareMatrix):
    if a.tag == b.tag:
        return a, b
    if a.tag == algebra.INT:
        return a.map(lambda x: algebra.lift(x, b.tag), b.tag), b
    if b.tag == algebra.INT:
        return a, b.map(lambda x: algebra.lift(x, a.tag), a.tag)
    raise CliError(f"cannot multiply a {a.tag} matrix by a {b.tag} matrix", EXIT_RANGE)


def cmd_lorentz_mul(args, out):
    a = _build(args.left, args.n)
    b = _build(args.right, args.n)
    if args.t is not None:
        a = a.evaluate(args.t) if a.tag == algebra.POLY else a
        b = b.evaluate(args.t) if b.tag == algebra.POLY else b
    a, b = _same_tag(a, b)
    product = lorentz_mul(a, b)
    formed = cofactor_det(product)
    law = det_of_lorentz_product(a, b)
    out.write(product.pretty() + "\n")
    out.write(f"det:             {algebra.render(formed)}\n")
    out.write(f"-det A * det B:  {algebra.render(law)}\n")
    if formed != law:
        out.write("DIFFER\n")
        return EXIT_ENGINE
    out.write("MATCH\n")
    return EXIT_OK


def cmd_table(args, out):
    try:
        table = tables.reproduce_table(args.which, args.n_max)
    except ValueError as exc:
        raise CliError(str(exc), EXIT_RANGE) from None
    out.write(tables.emit_table(table, args.format))
    return EXIT_OK


def cmd_verify(args, out):
    ids = None
    if args.claims:
        ids = [x.strip() for x in args.claims.split(",") if x.strip()]
        known = {c.id for c in claims.registered_claims()}
        unknown = [x for x in ids if x not in known]
        if unknown:
            raise CliError(f"unknown claim id(s): {', '.join(unknown)}", EXIT_UNKNOWN)
    try:
        report = claims.verify_all(args.n_max, args.t_samples, ids)
    except ValueError as exc:
        raise CliError(str(exc), EXIT_RANGE) from None
    text = claims.emit_report(report, args.format)
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
        counts = report.counts()
        out.write(
            f"wrote {args.out}: {counts[claims.VERIFIED]} verified, "
            f"{counts[claims.VERIFIED_FROM_M]} verified from m, {counts[claims.MISMATCH]} mismatched\n"
        )
    else:
        out.write(text)
    if args.strict and report.counts()[claims.MISMATCH]:
        return EXIT_FINDINGS
    return EXIT_OK


def cmd_seq(args, out):
    values = []
    for n in range(1, args.n_max + 1):
        d = cofactor_det(_build(args.family, n))
        values.append(_at_t(d, args.t))
    out.write(", ".join(algebra.render(v) for v in values) + "\n")
    if not args.identify:
        return EXIT_OK
    path = args.oeis_file or os.environ.get("OEIS_STRIPPED_PATH")
    if not path:
        raise CliError("--identify needs --oeis-file or OEIS_STRIPPED_PATH", EXIT_OEIS)
    try:
        index = oeis.load(path)
    except OSError as exc:
        raise CliError(f"cannot read OEIS file {path}: {exc.strerror or exc}", EXIT_OEIS) from None
    if not all(isinstance(v, int) for v in values):
        raise CliError("--identify needs an integer sequence; pass --t", EXIT_RANGE)
    try:
        matches = index.lookup(values, args.min_match)
    except ValueError as exc:
        raise CliError(str(exc), EXIT_RANGE) from None
    if not matches:
        out.write("no match\n")
    for m in matches:
        sign = " (negated)" if m.negated else ""
        out.write(f"{m.id} offset {m.offset}{sign}\n")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="fibhess",
        description="Exact Fibonacci-Hessenberg determinants, Lorentz products and a claims audit.",
    )
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("matrix", help="print a constructed matrix")
    s.add_argument("family")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--i", type=int, help="substitute column i (C, D, E only)")
    s.add_argument("--mode", choices=["allones", "basis"], default="allones")
    s.add_argument("--format", choices=["pretty", "json", "csv"], default="pretty")
    s.set_defaults(func=cmd_matrix)

    s = sub.add_parser("det", help="determinant of a family member")
    s.add_argument("family")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--t", type=int)
    s.add_argument("--i", type=int)
    s.add_argument("--mode", choices=["allones", "basis"], default="allones")
    s.add_argument("--engine", choices=["hessenberg", "cofactor", "both"], default="cofactor")
    s.set_defaults(func=cmd_det)

    s = sub.add_parser("lorentz-mul", help="Lorentz product of two families with the determinant check")
    s.add_argument("left")
    s.add_argument("right")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--t", type=int)
    s.set_defaults(func=cmd_lorentz_mul)

    s = sub.add_parser("table", help="recompute a published table with diff flags")
    s.add_argument("which", type=int, choices=[1, 2, 3])
    s.add_argument("--n-max", type=int, default=6)
    s.add_argument("--format", choices=["pretty", "text", "json", "csv"], default="text")
    s.set_defaults(func=cmd_table)

    s = sub.add_parser("verify", help="audit the registered claims")
    s.add_argument("--claims", help="comma-separated claim ids (default: all)")
    s.add_argument("--n-max", type=int, default=12)
    s.add_argument("--t-samples", type=_int_list, default=list(claims.DEFAULT_T_SAMPLES))
    s.add_argument("--strict", action="store_true", help="exit 1 when any claim mismatches")
    s.add_argument("--out")
    s.add_argument("--format", choices=["json", "csv", "text"], default="text")
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("seq", help="determinant sequence at fixed t")
    s.add_argument("family")
    s.add_argument("--t", type=int)
    s.add_argument("--n-max", type=int, required=True)
    s.add_argument("--identify", action="store_true")
    s.add_argument("--oeis-file")
    s.add_argument("--min-match", type=int, default=4)
    s.set_defaults(func=cmd_seq)
    return p


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        return args.func(args, out)
    except CliError as exc:
        print(f"fibhess: {exc}", file=sys.stderr)
        return exc.code
    except EngineDisagreement as exc:
        print(f"fibhess: engine disagreement: {exc}", file=sys.stderr)
        return EXIT_ENGINE


def run(argv) -> tuple:
    """(exit code, stdout text) for ``argv``; used by tests."""
    buf = io.StringIO()
    code = main(argv, buf)
    return code, buf.getvalue()


if __name__ == "__main__":
    sys.exit(main())
