"""Run every verification suite on the fixed grid and write a JSON report.

    python scripts/run_verification.py [--seed 0] [--out results/verify.json]
"""

import argparse
import json
import time
from pathlib import Path

from degbell.verify import SUITES, grid_header, run_suites


def main() -> None:
    ap = argparse.ArgumentParser()
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--out", type=Path, default=Path("results/verify.json"))
    args = ap.parse_args()

    rows = []
    for name in SUITES:
        t0 = time.perf_counter()
        (rep,) = run_suites([name], seed=args.seed)
        dt = time.perf_counter() - t0
        rows.append({"suite": name, "cases": len(rep.cases), "failures": len(rep.failures), "seconds": round(dt, 3)})
        print(f"{rep.summary():50s} {dt:6.2f}s")

    args.out.parent.mkdir(parents=True, exist_ok=True)
    doc = {"seed": args.seed, "grid": grid_header(), "suites": rows}
    args.out.write_text(json.dumps(doc, indent=2, sort_keys=True) + "\n")
    print(f"wrote {args.out}")
    raise SystemExit(0 if all(r["failures"] == 0 for r in rows) else 1)


if __name__ == "__main__":
    main()
