"""Deterministic SVG pictures of wiring diagrams and noncrossing partitions.

Wiring diagrams run left to right on a 40 pixel strand pitch with one
column per crossing; the strand passing underneath is interrupted by a
6 pixel gap on each side of the crossing point.  Noncrossing partitions
are drawn on a labeled circle with the label 1 at the top, subsequent
labels clockwise, and each block filled as a polygon, chord or dot.

The output is standalone SVG 1.1 text with two decimal coordinates, so
identical inputs produce byte identical files.
"""

from __future__ import annotations

import math
from typing import Union

from .dual import NoncrossingPartition
from .mikado import WiringDiagram

PITCH = 40
GAP = 6
MARGIN = 30
PALETTE = (
    "#1f77b4",
    "#d62728",
    "#2ca02c",
    "#9467bd",
    "#ff7f0e",
    "#8c564b",
    "#17becf",
    "#7f7f7f",
    "#bcbd22",
    "#e377c2",
)


def _fmt(x: float) -> str:
    return f"{x:.2f}"


def _line(x1: float, y1: float, x2: float, y2: float, color: str) -> str:
    return (
        f'<line x1="{_fmt(x1)}" y1="{_fmt(y1)}" x2="{_fmt(x2)}" y2="{_fmt(y2)}" '
        f'stroke="{color}" stroke-width="2.5" stroke-linecap="round"/>'
    )


def _text(x: float, y: float, s: str, anchor: str = "middle") -> str:
    return (
        f'<text x="{_fmt(x)}" y="{_fmt(y)}" font-family="monospace" font-size="13" '
        f'text-anchor="{anchor}" dominant-baseline="middle">{s}</text>'
    )


def _svg(width: float, height: float, body: list[str]) -> str:
    head = (
        '<?xml version="1.0" encoding="UTF-8"?>\n'
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{_fmt(width)}" height="{_fmt(height)}" '
        f'viewBox="0 0 {_fmt(width)} {_fmt(height)}">'
    )
    return "\n".join([head, '<rect width="100%" height="100%" fill="white"/>'] + body + ["</svg>"])


def _wiring_svg(d: WiringDiagram) -> str:
    n = d.strand_count
    m = len(d.crossings)
    width = 2 * MARGIN + PITCH * max(m, 1)
    height = 2 * MARGIN + PITCH * max(n - 1, 0)

    def slot_y(slot: int) -> float:
        return MARGIN + (slot - 1) * PITCH

    color = {s: PALETTE[(s - 1) % len(PALETTE)] for s in range(1, n + 1)}
    occ = list(range(1, n + 1))
    body = [_text(MARGIN - 12, slot_y(s), str(s), anchor="end") for s in occ]
    details = d.crossing_details()
    for k in range(max(m, 1)):
        x0, x1 = MARGIN + k * PITCH, MARGIN + (k + 1) * PITCH
        if k >= m:
            for slot, s in enumerate(occ, start=1):
                body.append(_line(x0, slot_y(slot), x1, slot_y(slot), color[s]))
            continue
        pos, _, over, under = details[k]
        for slot, s in enumerate(occ, start=1):
            if slot in (pos, pos + 1):
                continue
            body.append(_line(x0, slot_y(slot), x1, slot_y(slot), color[s]))
        ya, yb = slot_y(pos), slot_y(pos + 1)
        y_of = {occ[pos - 1]: (ya, yb), occ[pos]: (yb, ya)}
        uy0, uy1 = y_of[under]
        length = math.hypot(PITCH, abs(uy1 - uy0))
        t = 0.5 - GAP / length
        body.append(_line(x0, uy0, x0 + t * PITCH, uy0 + t * (uy1 - uy0), color[under]))
        body.append(
            _line(x1 - t * PITCH, uy1 - t * (uy1 - uy0), x1, uy1, color[under])
        )
        oy0, oy1 = y_of[over]
        body.append(_line(x0, oy0, x1, oy1, color[over]))
        occ[pos - 1], occ[pos] = occ[pos], occ[pos - 1]
    for slot, s in enumerate(occ, start=1):
        body.append(_text(width - MARGIN + 12, slot_y(slot), str(s), anchor="start"))
    return _svg(width, height, body)


def _ncp_svg(p: NoncrossingPartition) -> str:
    k = len(p.sequence)
    radius = max(40.0, 18.0 * k / math.pi)
    cx = cy = radius + MARGIN + 14
    size = 2 * cx

    def point(i: int) -> tuple[float, float]:
        ang = math.pi / 2 - 2 * math.pi * i / k
        return cx + radius * math.cos(ang), cy - radius * math.sin(ang)

    pos = p.positions()
    body = [
        f'<circle cx="{_fmt(cx)}" cy="{_fmt(cy)}" r="{_fmt(radius)}" '
        'fill="none" stroke="#999999" stroke-width="1"/>'
    ]
    for j, blk in enumerate(sorted(p.blocks, key=lambda b: pos[b[0]])):
        pts = [point(pos[l]) for l in blk]
        color = PALETTE[j % len(PALETTE)]
        if len(pts) == 1:
            body.append(
                f'<circle cx="{_fmt(pts[0][0])}" cy="{_fmt(pts[0][1])}" r="4" fill="{color}"/>'
            )
        elif len(pts) == 2:
            body.append(_line(*pts[0], *pts[1], color))
        else:
            coords = " ".join(f"{_fmt(x)},{_fmt(y)}" for x, y in pts)
            body.append(
                f'<polygon points="{coords}" fill="{color}" fill-opacity="0.25" '
                f'stroke="{color}" stroke-width="2"/>'
            )
        for x, y in pts:
            body.append(f'<circle cx="{_fmt(x)}" cy="{_fmt(y)}" r="3" fill="#333333"/>')
    for i, label in enumerate(p.sequence):
        ang = math.pi / 2 - 2 * math.pi * i / k
        lx = cx + (radius + 14) * math.cos(ang)
        ly = cy - (radius + 14) * math.sin(ang)
        body.append(_text(lx, ly, str(label)))
    return _svg(size, size, body)


def render_svg(obj: Union[WiringDiagram, NoncrossingPartition], path: str) -> str:
    """Write the picture of a diagram or partition to path, returning path."""
    if isinstance(obj, WiringDiagram):
        text = _wiring_svg(obj)
    elif isinstance(obj, NoncrossingPartition):
        text = _ncp_svg(obj)
    else:
        raise TypeError("can only render wiring diagrams and noncrossing partitions")
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(text)
    return path
