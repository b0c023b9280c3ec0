"""Truncated Poisson series for the r-Bell values: actual error vs. reported bound.

For each (k, r, lambda, x) the tolerance is swept over 1e-2 .. 1e-14 and the
number of terms, the a priori tail bound and the true error against the exact
rational value are printed as CSV.
"""

import argparse
import csv
import sys
from fractions import Fraction

from degbell.exactnum import parse_rational
from degbell.mpnum import mpq
from degbell.stirbell import bell_eval, dobinski


def main() -> None:
    ap = argparse.ArgumentParser()
    ap.add_argument("--k", type=int, nargs="+", default=[2, 5, 8])
    ap.add_argument("--r", type=int, default=2)
    ap.add_argument("--lambda", dest="lam", type=parse_rational, default=Fraction(1, 2))
    ap.add_argument("--x", type=parse_rational, nargs="+", default=[Fraction(1, 2), Fraction(1), Fraction(3)])
    args = ap.parse_args()

    out = csv.writer(sys.stdout, lineterminator="\n")
    out.writerow(["k", "r", "lambda", "x", "tol", "terms", "bound", "error"])
    for k in args.k:
        for x in args.x:
            exact = mpq(bell_eval(k, args.r, args.lam, x))
            for e in range(2, 15, 2):
                tol = 10.0**-e
                res = dobinski(k, args.r, args.lam, x, tol)
                err = abs(res.value - exact)
                assert err <= res.error_bound, (k, x, tol)
                out.writerow([k, args.r, args.lam, x, f"{tol:.0e}", res.terms, f"{res.bound:.3e}", f"{float(err):.3e}"])


if __name__ == "__main__":
    main()
