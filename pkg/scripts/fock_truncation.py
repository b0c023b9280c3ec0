"""Coherent-state expectation of (N + r)_{n,lambda} as the Fock cutoff D grows.

Prints the true error against the exact polynomial value next to the
truncation bound, showing where the bound becomes tight.
"""

import argparse
from fractions import Fraction

from degbell.bosonalg import deg_number_power
from degbell.exactnum import parse_rational
from degbell.focksim import expectation
from degbell.mpnum import mpq
from degbell.stirbell import bell_eval


def main() -> None:
    ap = argparse.ArgumentParser()
    ap.add_argument("--n", type=int, default=6)
    ap.add_argument("--r", type=int, default=3)
    ap.add_argument("--lambda", dest="lam", type=parse_rational, default=Fraction(-1, 3))
    ap.add_argument("--z", type=float, nargs="+", default=[0.5, 1.0, 2.0])
    args = ap.parse_args()

    nf = deg_number_power(args.n, args.r, args.lam)
    print(f"{'|z|':>5} {'D':>4} {'error':>11} {'bound':>11}")
    for z in args.z:
        exact = mpq(bell_eval(args.n, args.r, args.lam, Fraction(z) ** 2))
        for dim in (args.n + 1, 12, 16, 24, 32, 48, 64):
            res = expectation(z, nf, dim)
            err = float(abs(res.value - exact))
            print(f"{z:5.2f} {dim:4d} {err:11.3e} {res.truncation_bound:11.3e}")


if __name__ == "__main__":
    main()
