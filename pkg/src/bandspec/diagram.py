"""Band diagrams as standalone SVG."""

from __future__ import annotations

from xml.sax.saxutils import escape

from .spectra import SpectrumSet

WIDTH = 800
HEIGHT = 160
MARGIN = 40
BAR_Y = 50
BAR_H = 30
ATOM_W = 2.0  # px; zero-length bands would be invisible otherwise


def _fmt(x: float) -> str:
    return f"{x:.6g}"


def band_svg(s: SpectrumSet, title: str = "") -> str:
    lo, hi = s.lo, s.hi
    span = hi - lo
    pad = 0.05 * span if span > 0 else 1.0
    x0, x1 = lo - pad, hi + pad

    def px(x: float) -> float:
        return MARGIN + (x - x0) / (x1 - x0) * (WIDTH - 2 * MARGIN)

    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}" '
        f'viewBox="0 0 {WIDTH} {HEIGHT}">',
        f'<rect width="{WIDTH}" height="{HEIGHT}" fill="white"/>',
    ]
    if title:
        out.append(
            f'<text x="{WIDTH / 2:.2f}" y="22" text-anchor="middle" '
            f'font-family="sans-serif" font-size="14">{escape(title)}</text>'
        )
    axis_y = BAR_Y + BAR_H + 10
    out.append(
        f'<line x1="{MARGIN}" y1="{axis_y}" x2="{WIDTH - MARGIN}" y2="{axis_y}" '
        'stroke="black" stroke-width="1"/>'
    )
    ticks = []
    for a, b in s:
        if a == b:
            out.append(
                f'<rect class="atom" x="{px(a) - ATOM_W / 2:.2f}" y="{BAR_Y}" '
                f'width="{ATOM_W:.2f}" height="{BAR_H}" fill="#c0392b"/>'
            )
            ticks.append(a)
        else:
            out.append(
                f'<rect class="band" x="{px(a):.2f}" y="{BAR_Y}" '
                f'width="{px(b) - px(a):.2f}" height="{BAR_H}" fill="#2e86c1"/>'
            )
            ticks.extend((a, b))
    for k, t in enumerate(sorted(set(ticks))):
        x = px(t)
        ty = axis_y + 18 + 14 * (k % 2)
        out.append(
            f'<line x1="{x:.2f}" y1="{axis_y}" x2="{x:.2f}" y2="{axis_y + 5}" stroke="black"/>'
        )
        out.append(
            f'<text x="{x:.2f}" y="{ty}" text-anchor="middle" '
            f'font-family="sans-serif" font-size="11">{_fmt(t)}</text>'
        )
    out.append("</svg>")
    return "\n".join(out) + "\n"
