"""Diagram export for column spaces and piecewise maps (SVG and Graphviz DOT).

Columns sit at integer x positions with intervals drawn as vertical bars;
each piece gets an arrow from the middle of its source to the middle of its
image, labeled with its offset when nonzero. Closed endpoints are filled
dots, open endpoints hollow.
"""
from __future__ import annotations

from xml.sax.saxutils import escape

from gmpy2 import mpq

from .piecewise import ColumnSpace, PiecewiseMap, column_json

COL_DX = 60
UNIT = 40
MARGIN = 40


def _fmt(x) -> str:
    x = mpq(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def _num(v: float) -> str:
    return f"{v:.2f}".rstrip("0").rstrip(".")


def to_svg(space: ColumnSpace, f: PiecewiseMap | None = None, title: str = "", witnesses=()) -> str:
    cols = list(space.columns)
    xpos = {c: MARGIN + i * COL_DX for i, c in enumerate(cols)}
    top = max(p.hi for u in space.columns.values() for p in u)
    height = int(2 * MARGIN + top * UNIT + 30)
    width = int(2 * MARGIN + (len(cols) - 1) * COL_DX)

    def y(v) -> float:
        return MARGIN + float(top - mpq(v)) * UNIT

    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}" font-family="sans-serif" font-size="11">',
        "<defs><marker id=\"arrow\" viewBox=\"0 0 10 10\" refX=\"9\" refY=\"5\" markerWidth=\"6\" "
        "markerHeight=\"6\" orient=\"auto\"><path d=\"M0,0 L10,5 L0,10 z\" fill=\"#555\"/></marker></defs>",
    ]
    if title:
        out.append(f'<text x="{MARGIN}" y="16">{escape(title)}</text>')
    for c, u in space.columns.items():
        x = xpos[c]
        out.append(f'<text x="{x}" y="{height - 10}" text-anchor="middle">{escape(str(column_json(c)))}</text>')
        for part in u:
            out.append(
                f'<line class="part" x1="{x}" y1="{_num(y(part.lo))}" x2="{x}" y2="{_num(y(part.hi))}" '
                f'stroke="black" stroke-width="3"/>'
            )
            for v, closed in ((part.lo, part.lo_closed), (part.hi, part.hi_closed)):
                fill = "black" if closed else "white"
                out.append(f'<circle cx="{x}" cy="{_num(y(v))}" r="3" fill="{fill}" stroke="black"/>')
    if f is not None:
        for c, pieces in f.columns.items():
            if c not in xpos:
                continue
            for p in pieces:
                if p.target not in xpos:
                    continue
                src_mid = (p.source.lo + p.source.hi) / 2
                img_mid = src_mid + p.offset
                x1, y1 = xpos[c] + 4, y(src_mid)
                x2, y2 = xpos[p.target] - 4, y(img_mid)
                out.append(
                    f'<line class="piece" x1="{_num(x1)}" y1="{_num(y1)}" x2="{_num(x2)}" y2="{_num(y2)}" '
                    f'stroke="#555" marker-end="url(#arrow)"/>'
                )
                if p.offset:
                    sign = "+" if p.offset > 0 else ""
                    out.append(
                        f'<text x="{_num((x1 + x2) / 2)}" y="{_num((y1 + y2) / 2 - 4)}" '
                        f'text-anchor="middle" fill="#a00">{sign}{_fmt(p.offset)}</text>'
                    )
    for c, v in witnesses:
        if c in xpos:
            out.append(
                f'<circle class="witness" cx="{xpos[c]}" cy="{_num(y(v))}" r="7" fill="none" stroke="red"/>'
            )
    out.append("</svg>")
    return "\n".join(out) + "\n"


def to_dot(space: ColumnSpace, f: PiecewiseMap | None = None, name: str = "X") -> str:
    lines = [f"digraph {name} {{", "  rankdir=LR;", "  node [shape=box];"]
    node_of = {}
    for c, u in space.columns.items():
        for i, part in enumerate(u):
            node = f"c{column_json(c)}_{i}".replace("-", "m")
            node_of[(c, i)] = node
            lines.append(f'  {node} [label="{column_json(c)}: {part}"];')
    if f is not None:
        for c, pieces in f.columns.items():
            for p in pieces:
                if p.target not in space.columns or c not in space.columns:
                    continue
                src = next(i for i, part in enumerate(space[c]) if p.source.intersect(part) is not None)
                img = p.image
                dst = next(i for i, part in enumerate(space[p.target]) if img.intersect(part) is not None)
                label = f"{p.source} {'+' if p.offset >= 0 else ''}{_fmt(p.offset)}"
                lines.append(f'  {node_of[(c, src)]} -> {node_of[(p.target, dst)]} [label="{label}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
