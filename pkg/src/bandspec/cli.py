"""Command-line front end.

    bandspec spectrum "Line + 3@K5" [--kind laplacian] [--json]
    bandspec verify "Line + 2@K5" --trunc 32 [--tol 1e-8] [--cap 4000] [--json]
    bandspec diagram "Line + 3@K5" --out bands.svg

Exit codes: 0 success/pass, 1 verification failure, 2 usage, parse or
evaluation error.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Optional

from .diagram import band_svg
from .eigen import DEFAULT_TOL
from .expr import ExprError, ParseError, derived_spectrum, eval_meta, parse_expr
from .graphs import GraphError
from .verify import DEFAULT_CAP, CapExceeded, verify_containment

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


@dataclass
class SpectrumDocument:
    expression_text: str
    kind: str
    degree: Optional[int]
    bands: list  # [(lo, hi), ...]
    verification: Optional[dict] = None

    @property
    def band_count(self) -> int:
        return len(self.bands)

    def to_dict(self) -> dict:
        return {
            "expr": self.expression_text,
            "kind": self.kind,
            "degree": self.degree,
            "band_count": self.band_count,
            "bands": [{"lo": lo, "hi": hi} for lo, hi in self.bands],
            "verification": self.verification,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    @classmethod
    def from_dict(cls, d: dict) -> SpectrumDocument:
        bands = [(float(b["lo"]), float(b["hi"])) for b in d["bands"]]
        if d["band_count"] != len(bands):
            raise ValueError("band_count does not match bands")
        return cls(d["expr"], d["kind"], d["degree"], bands, d.get("verification"))

    @classmethod
    def from_json(cls, text: str) -> SpectrumDocument:
        return cls.from_dict(json.loads(text))

    def to_text(self) -> str:
        lines = [f"[{lo:.12g}, {hi:.12g}]" for lo, hi in self.bands]
        degree = "unknown" if self.degree is None else self.degree
        lines.append(f"bands: {self.band_count}  degree: {degree}")
        return "\n".join(lines)


def build_document(expr_text: str, kind: str = "adjacency", tol: float = DEFAULT_TOL) -> SpectrumDocument:
    e = parse_expr(expr_text)
    s = derived_spectrum(e, kind, tol)
    meta = eval_meta(e)
    return SpectrumDocument(
        expr_text, kind.replace("_", "-"), None if meta is None else meta.degree, list(s.intervals)
    )


def cmd_spectrum(args) -> int:
    doc = build_document(args.expr, args.kind, args.tol)
    print(doc.to_json() if args.json else doc.to_text())
    return EXIT_OK


def cmd_verify(args) -> int:
    e = parse_expr(args.expr)
    report = verify_containment(e, args.trunc, args.tol, args.cap)
    if args.json:
        doc = build_document(args.expr, "adjacency", args.tol)
        doc.verification = report.summary()
        print(doc.to_json())
    else:
        status = "PASS" if report.passed else "FAIL"
        print(f"{status}  {args.expr}")
        print(f"  truncation: {report.truncation_size}  vertices: {report.n_vertices}")
        print(f"  predicted: {report.predicted}")
        print(
            f"  eigenvalues: {report.computed.dimension}"
            f" ({len(report.computed.values)} distinct)"
            f"  violations: {len(report.containment_violations)}"
        )
        for x, d in report.containment_violations[:10]:
            print(f"    {x:.12g} lies {d:.3g} outside the predicted set")
        print(f"  max band distance: {report.max_band_distance:.6g}")
    return EXIT_OK if report.passed else EXIT_FAIL


def cmd_diagram(args) -> int:
    e = parse_expr(args.expr)
    s = derived_spectrum(e, args.kind, args.tol)
    out = Path(args.out)
    out.write_text(band_svg(s, args.expr))
    print(f"wrote {out} ({s.band_count()} bands)")
    return EXIT_OK


def make_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="bandspec", description="Band spectra of composed Cayley graphs.")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp):
        sp.add_argument("expr", help='graph expression, e.g. "Line + 3@K5"')
        sp.add_argument("--tol", type=float, default=DEFAULT_TOL)

    sp = sub.add_parser("spectrum", help="print the band spectrum")
    common(sp)
    sp.add_argument(
        "--kind", default="adjacency",
        choices=["adjacency", "laplacian", "markov", "normalized-laplacian"],
    )
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=cmd_spectrum)

    sp = sub.add_parser("verify", help="check the prediction against a finite truncation")
    common(sp)
    sp.add_argument("--trunc", type=int, default=16)
    sp.add_argument("--cap", type=int, default=DEFAULT_CAP)
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("diagram", help="write an SVG band diagram")
    common(sp)
    sp.add_argument(
        "--kind", default="adjacency",
        choices=["adjacency", "laplacian", "markov", "normalized-laplacian"],
    )
    sp.add_argument("--out", default="bands.svg")
    sp.set_defaults(func=cmd_diagram)
    return p


def main(argv=None) -> int:
    args = make_parser().parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"error: {exc.annotated()}", file=sys.stderr)
    except CapExceeded as exc:
        print(f"error: {exc}; raise --cap to at least {exc.size} or lower --trunc", file=sys.stderr)
    except (ExprError, GraphError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
    return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
