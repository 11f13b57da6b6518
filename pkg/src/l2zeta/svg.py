"""Hand-written SVG diagram of branch points in the u-plane."""

from __future__ import annotations

import math

SIZE = 800
CENTER = SIZE / 2
PLOT_RADIUS = 340.0

_PALETTE = ["#c0392b", "#2471a3", "#1e8449", "#7d3c98", "#b9770e", "#566573"]


def _f(x: float) -> str:
    s = f"{x:.2f}"
    return "0.00" if s == "-0.00" else s


def _xy(u: complex, scale: float) -> tuple[str, str]:
    return _f(CENTER + u.real * scale), _f(CENTER - u.imag * scale)


def branch_svg(branch_points: list[dict], q: int | None, title: str = "") -> str:
    """SVG text for a list of {"location", "cycle_structure"} entries.

    ``location`` is a complex number or "inf". For a regular graph the set
    C (circle |u| = q^-1/2 and the real segments between 1/q and 1) is drawn
    as a guide; otherwise circles of radius 1/sqrt(2) and 1/sqrt(3) are drawn
    for scale.
    """
    finite = [bp for bp in branch_points if bp["location"] != "inf"]
    at_inf = [bp for bp in branch_points if bp["location"] == "inf"]
    extent = max([1.0] + [abs(bp["location"]) for bp in finite]) * 1.1
    scale = PLOT_RADIUS / extent
    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{SIZE}" height="{SIZE}" '
        f'viewBox="0 0 {SIZE} {SIZE}">',
        f'<rect x="0" y="0" width="{SIZE}" height="{SIZE}" fill="white"/>',
    ]
    # axes
    lo, hi = _f(CENTER - PLOT_RADIUS - 20), _f(CENTER + PLOT_RADIUS + 20)
    c = _f(CENTER)
    out.append(f'<line x1="{lo}" y1="{c}" x2="{hi}" y2="{c}" stroke="#999" stroke-width="1"/>')
    out.append(f'<line x1="{c}" y1="{lo}" x2="{c}" y2="{hi}" stroke="#999" stroke-width="1"/>')
    for tick in (-1, 1):
        x, _ = _xy(complex(tick, 0), scale)
        out.append(f'<text x="{x}" y="{_f(CENTER + 16)}" font-size="12" '
                   f'text-anchor="middle" fill="#555">{tick}</text>')
    # guides
    if q is not None:
        r = _f(q ** -0.5 * scale)
        out.append(f'<circle cx="{c}" cy="{c}" r="{r}" fill="none" stroke="#888" '
                   f'stroke-width="1.5"/>')
        for a, b in ((1 / q, 1.0), (-1.0, -1 / q)):
            x1, _ = _xy(complex(a, 0), scale)
            x2, _ = _xy(complex(b, 0), scale)
            out.append(f'<line x1="{x1}" y1="{c}" x2="{x2}" y2="{c}" stroke="#888" '
                       f'stroke-width="4"/>')
    else:
        for rad in (1 / math.sqrt(2), 1 / math.sqrt(3)):
            out.append(f'<circle cx="{c}" cy="{c}" r="{_f(rad * scale)}" fill="none" '
                       f'stroke="#888" stroke-width="1" stroke-dasharray="6,4"/>')
    # marks, one colour per cycle structure
    kinds = sorted({tuple(bp["cycle_structure"]) for bp in branch_points}, reverse=True)
    colour = {k: _PALETTE[i % len(_PALETTE)] for i, k in enumerate(kinds)}
    for bp in finite:
        x, y = _xy(complex(bp["location"]), scale)
        out.append(f'<circle cx="{x}" cy="{y}" r="5" '
                   f'fill="{colour[tuple(bp["cycle_structure"])]}"/>')
    # legend
    lines = []
    if title:
        lines.append(("#000", title))
    for k in kinds:
        lines.append((colour[k], "cycle type (" + ",".join(map(str, k)) + ")"))
    if at_inf:
        ct = ",".join(map(str, at_inf[0]["cycle_structure"]))
        lines.append(("#000", f"∞ branched ({ct})"))
    else:
        lines.append(("#000", "∞ unbranched"))
    if q is not None:
        lines.append(("#888", f"C: |u| = {q}^-1/2 and 1/{q} ≤ |u| ≤ 1 on the real axis"))
    else:
        lines.append(("#888", "non-regular: circles of radius 1/√2 and 1/√3"))
    for i, (col, text) in enumerate(lines):
        out.append(f'<text x="16" y="{24 + 18 * i}" font-size="14" fill="{col}">'
                   f'{_escape(text)}</text>')
    out.append("</svg>")
    return "\n".join(out) + "\n"


def _escape(s: str) -> str:
    return s.replace("&", "&amp;").replace("<", "&lt;").replace(">", "&gt;")
