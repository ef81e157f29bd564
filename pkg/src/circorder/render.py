"""Static rendering of circular orderings: SVG chords diagram and DOT.

Vertices sit on the unit circle per the clockwise embedding; edges are
straight chords, so crossing edges are exactly the chords that intersect
inside the circle.  Output is byte-deterministic for a fixed input.
"""

from .circular import CircularOrderedGraph, unit_circle_points

__all__ = ["render_svg", "render_dot"]


def _fmt(x: float) -> str:
    s = f"{x:.6f}"
    return "0.000000" if s == "-0.000000" else s


def render_svg(cog: CircularOrderedGraph, size: int = 420) -> str:
    pts = {v: (x, y) for v, x, y in unit_circle_points(cog)}
    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{size}" height="{size}" '
        'viewBox="-1.25 -1.25 2.5 2.5">',
        '<circle cx="0" cy="0" r="1" fill="none" stroke="#cccccc" stroke-width="0.012"/>',
    ]
    for u, v in cog.graph.sorted_edges():
        (x1, y1), (x2, y2) = pts[u], pts[v]
        lines.append(
            f'<line x1="{_fmt(x1)}" y1="{_fmt(y1)}" x2="{_fmt(x2)}" y2="{_fmt(y2)}" '
            'stroke="#222222" stroke-width="0.02"/>'
        )
    for v in sorted(pts):
        x, y = pts[v]
        lines.append(
            f'<circle cx="{_fmt(x)}" cy="{_fmt(y)}" r="0.06" fill="#ffffff" '
            'stroke="#222222" stroke-width="0.015"/>'
        )
        lines.append(
            f'<text x="{_fmt(x)}" y="{_fmt(y + 0.028)}" font-size="0.09" '
            f'text-anchor="middle" font-family="sans-serif">{v}</text>'
        )
    lines.append("</svg>")
    return "\n".join(lines) + "\n"


def render_dot(cog: CircularOrderedGraph) -> str:
    pts = {v: (x, y) for v, x, y in unit_circle_points(cog)}
    lines = ["graph ordering {", "  layout=neato;", "  node [shape=circle];"]
    for v in sorted(pts):
        x, y = pts[v]
        lines.append(f'  v{v} [label="{v}", pos="{_fmt(x)},{_fmt(-y)}!"];')
    for u, v in cog.graph.sorted_edges():
        lines.append(f"  v{u} -- v{v};")
    lines.append("}")
    return "\n".join(lines) + "\n"
