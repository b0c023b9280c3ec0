"""Command-line front end.

Exit codes: 0 success, 1 a verified identity failed, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from fractions import Fraction

from .bosonalg import NormalForm, ParseError, deg_number_power, normal_order, parse
from .exactnum import format_rational, parse_rational
from .focksim import DEFAULT_DIM, expectation, genfun_eval
from .mpnum import ctx, mpq
from .powser import DEFAULT_ORDER, coefficients_as_egf
from .stirbell import StirlingTable, bell_eval, bell_poly, dobinski, genfun_series, stirling_table
from .verify import SUITES, grid_header, run_suites


def _rational(text: str) -> Fraction:
    try:
        return parse_rational(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _positive_rational(text: str) -> Fraction:
    q = _rational(text)
    if q <= 0:
        raise argparse.ArgumentTypeError(f"{text!r} must be positive")
    return q


def _nonneg_int(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"{text!r} is not an integer") from None
    if v < 0:
        raise argparse.ArgumentTypeError(f"{text!r} must be nonnegative")
    return v


def _positive_int(text: str) -> int:
    v = _nonneg_int(text)
    if v < 1:
        raise argparse.ArgumentTypeError(f"{text!r} must be positive")
    return v


def _positive_float(text: str) -> float:
    try:
        v = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"{text!r} is not a number") from None
    if not v > 0:
        raise argparse.ArgumentTypeError(f"{text!r} must be positive")
    return v


def _complex(text: str) -> tuple[Fraction, Fraction]:
    """'re,im' or 're', each part a rational or a decimal."""
    parts = text.split(",")
    if len(parts) > 2:
        raise argparse.ArgumentTypeError(f"malformed complex number {text!r}")
    try:
        vals = [_exact_decimal(p) for p in parts]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None
    return (vals[0], vals[1] if len(vals) == 2 else Fraction(0))


def _exact_decimal(text: str) -> Fraction:
    text = text.strip()
    if "/" in text:
        return parse_rational(text)
    try:
        return Fraction(text)
    except ValueError:
        raise ValueError(f"malformed number {text!r}") from None


def _add_params(p: argparse.ArgumentParser, *names: str) -> None:
    if "r" in names:
        p.add_argument("--r", type=_nonneg_int, default=0)
    if "lambda" in names:
        p.add_argument("--lambda", dest="lam", type=_rational, default=Fraction(0), metavar="P/Q")
    if "format" in names:
        p.add_argument("--format", choices=("text", "csv", "json"), default="text")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="degbell",
        description="Degenerate r-Stirling numbers, r-Bell polynomials and boson normal ordering.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("stirling", help="table of degenerate r-Stirling numbers")
    p.add_argument("--nmax", type=_nonneg_int, default=8)
    _add_params(p, "r", "lambda", "format")

    p = sub.add_parser("bell", help="degenerate r-Bell polynomial and its value")
    p.add_argument("--n", type=_nonneg_int, required=True)
    p.add_argument("--x", type=_rational, default=Fraction(1))
    _add_params(p, "r", "lambda", "format")

    p = sub.add_parser("normal-order", help="normally order an operator expression")
    p.add_argument("expr", help="e.g. 'a ad' or '(N + 2)_{3, 1/2}'")
    _add_params(p, "format")

    p = sub.add_parser("dobinski", help="truncated Dobinski-type series")
    p.add_argument("--k", type=_nonneg_int, required=True)
    p.add_argument("--x", type=_positive_rational, default=Fraction(1))
    p.add_argument("--tol", type=_positive_float, default=1e-10)
    _add_params(p, "r", "lambda", "format")

    p = sub.add_parser("expect", help="coherent-state expectation in a truncated Fock space")
    p.add_argument("--z", type=_complex, default=(Fraction(1), Fraction(0)), metavar="RE,IM")
    p.add_argument("--n", type=_nonneg_int, default=None, help="use (N + r)_{n,lambda}")
    p.add_argument("--expr", default=None, help="operator expression instead of --n")
    p.add_argument("--dim", type=_positive_int, default=DEFAULT_DIM)
    _add_params(p, "r", "lambda", "format")

    p = sub.add_parser("genfun", help="generating function of the r-Bell polynomials")
    p.add_argument("--x", type=_rational, default=Fraction(1))
    p.add_argument("--order", type=_nonneg_int, default=DEFAULT_ORDER)
    p.add_argument("--t", type=_exact_decimal_arg, default=None, help="also evaluate numerically at t")
    p.add_argument("--dim", type=_positive_int, default=DEFAULT_DIM)
    _add_params(p, "r", "lambda", "format")

    p = sub.add_parser("verify", help="run the identity verification suites")
    p.add_argument("--suite", default="all", help=f"all or comma-separated from: {', '.join(SUITES)}")
    p.add_argument("--seed", type=int, default=0)
    _add_params(p, "format")
    return parser


def _exact_decimal_arg(text: str) -> Fraction:
    try:
        return _exact_decimal(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def emit(result, fmt: str) -> str:
    """Serialise a table, normal form or record dict deterministically.

    JSON keys are sorted and CSV uses LF line endings.
    """
    if isinstance(result, StirlingTable):
        if fmt == "csv":
            return result.to_csv()
        if fmt == "json":
            return result.to_json() + "\n"
        head = f"# degenerate r-Stirling numbers, r={result.r}, lambda={format_rational(result.lam)}\n"
        return head + "".join(" ".join(format_rational(v) for v in row) + "\n" for row in result.rows)
    if isinstance(result, NormalForm):
        if fmt == "text":
            return str(result) + "\n"
        if fmt == "csv":
            rows = [f"{i},{j},{format_rational(c)}\n" for (i, j), c in result.sorted_terms()]
            return "i,j,coeff\n" + "".join(rows)
        terms = [[i, j, format_rational(c)] for (i, j), c in result.sorted_terms()]
        return json.dumps({"terms": terms}, sort_keys=True) + "\n"
    if fmt == "json":
        return json.dumps(result, sort_keys=True) + "\n"
    if isinstance(result, dict):
        return "".join(f"{k}: {result[k]}\n" for k in sorted(result))
    return str(result) + "\n"


def _cmd_stirling(args) -> tuple[str, int]:
    return emit(stirling_table(args.nmax, args.r, args.lam), args.format), 0


def _cmd_bell(args) -> tuple[str, int]:
    poly = bell_poly(args.n, args.r, args.lam)
    value = poly(args.x)
    record = {
        "n": args.n,
        "r": args.r,
        "lambda": format_rational(args.lam),
        "coeffs": [format_rational(c) for c in poly.coeffs],
        "x": format_rational(args.x),
        "value": format_rational(value),
    }
    if args.format == "text":
        return f"phi(x) = {poly}\nphi({record['x']}) = {record['value']}\n", 0
    if args.format == "csv":
        return "k,coeff\n" + "".join(f"{k},{format_rational(c)}\n" for k, c in enumerate(poly.coeffs)), 0
    return emit(record, "json"), 0


def _cmd_normal_order(args) -> tuple[str, int]:
    return emit(normal_order(parse(args.expr)), args.format), 0


def _cmd_dobinski(args) -> tuple[str, int]:
    res = dobinski(args.k, args.r, args.lam, args.x, args.tol)
    exact = bell_eval(args.k, args.r, args.lam, args.x)
    record = {
        "value": float(res.value),
        "value_digits": str(res.value),
        "bound": res.bound,
        "rounding": res.rounding,
        "terms": res.terms,
        "exact": format_rational(exact),
        "error": float(abs(res.value - mpq(exact))),
    }
    return emit(record, args.format if args.format != "csv" else "text"), 0


def _cmd_expect(args) -> tuple[str, int]:
    if args.expr is not None:
        nf = normal_order(parse(args.expr))
    elif args.n is not None:
        nf = deg_number_power(args.n, args.r, args.lam)
    else:
        raise _UsageError("expect needs --n or --expr")
    if args.dim <= nf.max_degree():
        raise _UsageError(f"--dim must exceed the largest monomial degree {nf.max_degree()}")
    res = expectation(args.z, nf, args.dim)
    record = res.as_record()
    if args.expr is None:
        x = args.z[0] ** 2 + args.z[1] ** 2
        record["bell"] = format_rational(bell_eval(args.n, args.r, args.lam, x))
    return emit(record, args.format if args.format != "csv" else "text"), 0


def _cmd_genfun(args) -> tuple[str, int]:
    series = genfun_series(args.r, args.lam, args.x, args.order)
    record = {
        "series": str(series),
        "bell": [format_rational(v) for v in coefficients_as_egf(series)],
    }
    if args.t is not None:
        if 1 + args.lam * args.t <= 0:
            raise _UsageError("need 1 + lambda*t > 0")
        # real z with |z|^2 = x
        res = genfun_eval(ctx.sqrt(mpq(args.x)), args.r, args.lam, args.t, args.dim)
        record.update(lhs=float(res.lhs), rhs=float(res.rhs), tail_bound=float(res.tail_bound))
    return emit(record, args.format if args.format != "csv" else "text"), 0


def _cmd_verify(args) -> tuple[str, int]:
    names = [s.strip() for s in args.suite.split(",") if s.strip()]
    if names != ["all"] and any(n not in SUITES for n in names):
        raise _UsageError(f"unknown suite in {args.suite!r}; choose from all, {', '.join(SUITES)}")
    t0 = time.perf_counter()
    reports = run_suites(names, seed=args.seed)
    elapsed = time.perf_counter() - t0
    failures = [(rep.name, c) for rep in reports for c in rep.failures]
    code = 0 if not failures else 1
    if args.format == "json":
        doc = {
            "suite": args.suite,
            "seed": args.seed,
            "grid": grid_header(),
            "cases": sum(len(rep.cases) for rep in reports),
            "suites": [
                {"name": rep.name, "cases": len(rep.cases), "failures": len(rep.failures)}
                for rep in reports
            ],
            "failures": [dict(c.as_dict(), suite=name) for name, c in failures],
        }
        return emit(doc, "json"), code
    lines = [f"# grid: {json.dumps(grid_header(), sort_keys=True)}", f"# seed: {args.seed}"]
    lines += [rep.summary() for rep in reports]
    if failures:
        name, c = failures[0]
        lines.append(f"first failure: [{name}] {c.key}")
        lines.append(f"  lhs = {c.lhs}")
        lines.append(f"  rhs = {c.rhs}")
    lines.append(f"{'OK' if code == 0 else 'FAILED'} ({elapsed:.1f}s)")
    return "\n".join(lines) + "\n", code


class _UsageError(Exception):
    pass


_COMMANDS = {
    "stirling": _cmd_stirling,
    "bell": _cmd_bell,
    "normal-order": _cmd_normal_order,
    "dobinski": _cmd_dobinski,
    "expect": _cmd_expect,
    "genfun": _cmd_genfun,
    "verify": _cmd_verify,
}


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code is not None else 0
    try:
        out, code = _COMMANDS[args.command](args)
    except (_UsageError, ParseError) as exc:
        print(f"degbell {args.command}: error: {exc}", file=sys.stderr)
        return 2
    sys.stdout.write(out)
    return code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
