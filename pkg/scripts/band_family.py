"""Band structure of Line + N@K_n (and the K_{n,n} variant) over a grid of (n, N).

    python scripts/band_family.py --n 4 5 6 9 --N 1 2 3 4
"""

import argparse

from bandspec.expr import eval_meta, eval_spectrum, parse_expr


def main():
    p = argparse.ArgumentParser()
    p.add_argument("--n", type=int, nargs="+", default=[4, 5, 6, 9])
    p.add_argument("--N", type=int, nargs="+", default=[1, 2, 3, 4])
    p.add_argument("--bipartite", action="store_true", help="use Kb<n> instead of K<n>")
    args = p.parse_args()

    atom = "Kb" if args.bipartite else "K"
    print(f"{'expr':<18} {'deg':>4} {'bands':>5}  gaps")
    for n in args.n:
        for N in args.N:
            text = f"Line + {N}@{atom}{n}"
            e = parse_expr(text)
            s = eval_spectrum(e)
            gaps = ", ".join(f"{b - a:g}" for a, b in s.gaps()) or "-"
            print(f"{text:<18} {eval_meta(e).degree:>4} {s.band_count():>5}  {gaps}")


if __name__ == "__main__":
    main()
