"""Write SVG band diagrams for a handful of expressions into an output directory."""

import argparse
import re
from pathlib import Path

from bandspec.diagram import band_svg
from bandspec.expr import eval_spectrum, parse_expr

EXAMPLES = ["Line", "3@K5", "Line + 3@K5", "Line + 2@Kb5", "Lattice2 + 2@K9", "Free2 + 2@K8", "Line * K3"]


def main():
    p = argparse.ArgumentParser()
    p.add_argument("--out", default="figures")
    args = p.parse_args()
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    for text in EXAMPLES:
        name = re.sub(r"[^A-Za-z0-9]+", "_", text).strip("_") + ".svg"
        (out / name).write_text(band_svg(eval_spectrum(parse_expr(text)), text))
        print(out / name)


if __name__ == "__main__":
    main()
