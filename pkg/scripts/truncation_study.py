"""How finite truncations fill the predicted bands.

For each truncation prints the vertex count, containment violations and
max_band_distance (sup distance from a band point to the nearest eigenvalue).

    python scripts/truncation_study.py "Line + 2@K5" --trunc 8 16 32 64
"""

import argparse
import time

from bandspec.expr import parse_expr
from bandspec.verify import coverage_gated, coverage_is_monotone, verify_containment


def main():
    p = argparse.ArgumentParser()
    p.add_argument("expr", nargs="?", default="Line + 2@K5")
    p.add_argument("--trunc", type=int, nargs="+", default=[8, 16, 32, 64])
    p.add_argument("--tol", type=float, default=1e-8)
    p.add_argument("--cap", type=int, default=4000)
    args = p.parse_args()

    e = parse_expr(args.expr)
    reports = []
    print(f"{args.expr}")
    print(f"{'m':>5} {'|V|':>6} {'viol':>5} {'max_band_dist':>14} {'secs':>6}")
    for m in args.trunc:
        t0 = time.perf_counter()
        r = verify_containment(e, m, args.tol, args.cap)
        reports.append(r)
        print(
            f"{m:>5} {r.n_vertices:>6} {len(r.containment_violations):>5} "
            f"{r.max_band_distance:>14.6g} {time.perf_counter() - t0:>6.2f}"
        )
    note = "" if coverage_gated(e) else " (informational: tree leaves)"
    print(f"monotone within 10%: {coverage_is_monotone(reports)}{note}")


if __name__ == "__main__":
    main()
