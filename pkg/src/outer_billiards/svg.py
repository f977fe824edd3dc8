"""Deterministic SVG 1.1 rendering of exact scenes.

Coordinates are converted to decimal only here, with 12 significant digits,
and the y axis is flipped so that the picture has the usual orientation.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence
from xml.sax.saxutils import quoteattr

from .geometry import (ConvexPolygon, DirectedLine, Empty, HalfPlane, Point,
                       halfplane_intersection)


@dataclass
class Scene:
    items: list = field(default_factory=list)
    margin: Fraction = Fraction(1, 10)

    def polygon(self, pts: Sequence[Point], **style):
        self.items.append(("polygon", tuple(pts), style))

    def polyline(self, pts: Sequence[Point], **style):
        self.items.append(("polyline", tuple(pts), style))

    def segment(self, a: Point, b: Point, **style):
        self.items.append(("polyline", (a, b), style))

    def point(self, p: Point, r: float = 3, **style):
        self.items.append(("point", (p,), dict(style, r=r)))

    def line(self, line: DirectedLine, **style):
        """Infinite line, clipped to the viewport."""
        self.items.append(("line", line, style))

    def region(self, planes: Sequence[HalfPlane], **style):
        """Intersection of half-planes, clipped to the viewport."""
        self.items.append(("region", tuple(planes), style))

    def bounds(self):
        pts = [p for kind, data, _ in self.items if kind in ("polygon", "polyline", "point")
               for p in data]
        if not pts:
            return Fraction(-1), Fraction(-1), Fraction(1), Fraction(1)
        x0, x1 = min(p.x for p in pts), max(p.x for p in pts)
        y0, y1 = min(p.y for p in pts), max(p.y for p in pts)
        pad = max(x1 - x0, y1 - y0, Fraction(1)) * self.margin
        return x0 - pad, y0 - pad, x1 + pad, y1 + pad


def _num(q) -> str:
    s = format(float(q), ".12g")
    return "0" if s == "-0" else s


def _xy(p: Point) -> str:
    return f"{_num(p.x)},{_num(-p.y)}"


def _style(style: dict, default_fill="none") -> str:
    style = dict(style)
    style.setdefault("fill", default_fill)
    style.setdefault("stroke", "black")
    out = []
    for k in sorted(style):
        if k == "r":
            continue
        out.append(f"{k.replace('_', '-')}={quoteattr(str(style[k]))}")
    return " ".join(out)


def render_svg(scene: Scene, width: int = 800) -> str:
    x0, y0, x1, y1 = scene.bounds()
    view = ConvexPolygon([Point(x0, y0), Point(x1, y0), Point(x1, y1), Point(x0, y1)])
    w, h = x1 - x0, y1 - y0
    height = max(1, round(width * h / w))
    stroke = _num(w / 500)
    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{width}" '
        f'height="{height}" viewBox="{_num(x0)} {_num(-y1)} {_num(w)} {_num(h)}">',
        f'<g stroke-width="{stroke}">',
    ]
    for kind, data, style in scene.items:
        if kind == "polygon":
            pts = " ".join(_xy(p) for p in data)
            lines.append(f'<polygon points="{pts}" {_style(style)}/>')
        elif kind == "polyline":
            pts = " ".join(_xy(p) for p in data)
            lines.append(f'<polyline points="{pts}" {_style(style)}/>')
        elif kind == "point":
            (p,) = data
            r = _num(w * Fraction(style.get("r", 3)) / width)
            lines.append(f'<circle cx="{_num(p.x)}" cy="{_num(-p.y)}" r="{r}" '
                         f'{_style(style, default_fill="black")}/>')
        elif kind == "line":
            seg = _clip_line(data, view)
            if seg:
                a, b = seg
                lines.append(f'<line x1="{_num(a.x)}" y1="{_num(-a.y)}" x2="{_num(b.x)}" '
                             f'y2="{_num(-b.y)}" {_style(style)}/>')
        elif kind == "region":
            poly = halfplane_intersection(data, view)
            if not isinstance(poly, Empty):
                pts = " ".join(_xy(p) for p in poly.vertices)
                lines.append(f'<polygon points="{pts}" {_style(style)}/>')
    lines.append("</g>")
    lines.append("</svg>")
    return "\n".join(lines) + "\n"


def _clip_line(line: DirectedLine, view: ConvexPolygon):
    """Segment of an infinite line inside a convex viewport, or None."""
    a = line.base
    d = line.dir
    lo, hi = None, None
    for i in range(view.n):
        edge = DirectedLine(view[i], view.side(i))
        # inside(t) = cross(e, a + t d - v) >= 0
        c0 = edge.dir.x * (a.y - edge.base.y) - edge.dir.y * (a.x - edge.base.x)
        c1 = edge.dir.x * d.y - edge.dir.y * d.x
        if c1 == 0:
            if c0 < 0:
                return None
            continue
        t = -c0 / c1
        if c1 > 0:
            lo = t if lo is None else max(lo, t)
        else:
            hi = t if hi is None else min(hi, t)
    if lo is None or hi is None or lo >= hi:
        return None
    return line.point_at(lo), line.point_at(hi)
