"""Exact rational planar primitives.

Every coordinate is a :class:`fractions.Fraction`; no floating point value is
ever produced here, so all predicates return the true sign.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import NotConvex, ParallelSides, PointOnBoundary, TooFewVertices

LEFT = 1
RIGHT = -1
COLLINEAR = 0

_F0 = Fraction(0)


def as_fraction(value) -> Fraction:
    """Convert ints, Fractions and ``"p/q"`` strings; floats are refused."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not coordinates")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        text = value.strip()
        if any(c in text for c in ".eE") or not text:
            raise ValueError(f"not an exact rational literal: {value!r}")
        return Fraction(text)
    raise TypeError(f"cannot use {type(value).__name__} as an exact coordinate")


def fraction_str(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def sign(q) -> int:
    return (q > 0) - (q < 0)


class Point:
    """Immutable point (or vector) of the rational plane."""

    __slots__ = ("x", "y")

    def __init__(self, x, y):
        object.__setattr__(self, "x", as_fraction(x))
        object.__setattr__(self, "y", as_fraction(y))

    @classmethod
    def _raw(cls, x: Fraction, y: Fraction) -> "Point":
        p = object.__new__(cls)
        object.__setattr__(p, "x", x)
        object.__setattr__(p, "y", y)
        return p

    def __setattr__(self, name, value):
        raise AttributeError("Point is immutable")

    def __iter__(self):
        yield self.x
        yield self.y

    def __eq__(self, other):
        if not isinstance(other, Point):
            return NotImplemented
        return self.x == other.x and self.y == other.y

    def __hash__(self):
        return hash((self.x, self.y))

    def __repr__(self):
        return f"Point({fraction_str(self.x)}, {fraction_str(self.y)})"

    def __add__(self, other: "Point") -> "Point":
        return Point._raw(self.x + other.x, self.y + other.y)

    def __sub__(self, other: "Point") -> "Point":
        return Point._raw(self.x - other.x, self.y - other.y)

    def __neg__(self) -> "Point":
        return Point._raw(-self.x, -self.y)

    def __mul__(self, k) -> "Point":
        k = as_fraction(k)
        return Point._raw(self.x * k, self.y * k)

    __rmul__ = __mul__

    def __truediv__(self, k) -> "Point":
        k = as_fraction(k)
        return Point._raw(self.x / k, self.y / k)

    def __bool__(self):
        return bool(self.x) or bool(self.y)

    def to_strings(self) -> list[str]:
        return [fraction_str(self.x), fraction_str(self.y)]


# Points and displacement vectors share one representation.
Vector = Point
ORIGIN = Point(0, 0)


def cross(u: Point, v: Point) -> Fraction:
    return u.x * v.y - u.y * v.x


def dot(u: Point, v: Point) -> Fraction:
    return u.x * v.x + u.y * v.y


def norm_sq(u: Point) -> Fraction:
    return u.x * u.x + u.y * u.y


def orientation(a: Point, b: Point, c: Point) -> int:
    """Sign of (b - a) x (c - a): LEFT, RIGHT or COLLINEAR."""
    return sign((b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x))


def reflect(x: Point, c: Point) -> Point:
    """Point reflection of ``x`` in ``c``."""
    return Point._raw(2 * c.x - x.x, 2 * c.y - x.y)


def sqrt_upper(q: Fraction, digits: int = 6) -> Fraction:
    """A rational r with r >= sqrt(q) and r - sqrt(q) <= 10**-digits (q >= 0)."""
    scale = 10 ** digits
    num = q.numerator * scale * scale
    den = q.denominator
    # ceil(sqrt(num / den)) via integer square roots
    r = math.isqrt(num // den)
    while r * r * den < num:
        r += 1
    return Fraction(r, scale)


def sqrt_lower(q: Fraction, digits: int = 6) -> Fraction:
    scale = 10 ** digits
    return Fraction(math.isqrt(q.numerator * scale * scale // q.denominator), scale)


def point_segment_dist_sq(x: Point, a: Point, b: Point) -> Fraction:
    ab = b - a
    ax = x - a
    t = dot(ax, ab)
    if t <= 0:
        return norm_sq(ax)
    L = norm_sq(ab)
    if t >= L:
        return norm_sq(x - b)
    c = cross(ab, ax)
    return c * c / L


@dataclass(frozen=True)
class DirectedLine:
    base: Point
    dir: Vector

    def __post_init__(self):
        if not self.dir:
            raise ValueError("direction of a line must be nonzero")

    def side(self, p: Point) -> int:
        """LEFT if p is strictly left of the line, RIGHT, or COLLINEAR."""
        return sign(cross(self.dir, p - self.base))

    def point_at(self, t) -> Point:
        return self.base + self.dir * t

    def intersect(self, other: "DirectedLine") -> Point | None:
        d = cross(self.dir, other.dir)
        if d == 0:
            return None
        t = cross(other.base - self.base, other.dir) / d
        return self.point_at(t)


@dataclass(frozen=True)
class HalfPlane:
    """The set left of ``boundary``; ``closed`` includes the line itself."""

    boundary: DirectedLine
    closed: bool = False

    def contains(self, p: Point) -> bool:
        s = self.boundary.side(p)
        return s > 0 or (self.closed and s == 0)


class ConvexPolygon:
    """Validated strictly convex polygon with counterclockwise vertices.

    Use :func:`validate_polygon` to build one from arbitrary input.
    """

    __slots__ = ("vertices", "_table")

    def __init__(self, vertices: Sequence[Point]):
        self.vertices = tuple(vertices)
        self._table = None

    def __len__(self):
        return len(self.vertices)

    def __getitem__(self, i):
        return self.vertices[i % len(self.vertices)]

    def __iter__(self):
        return iter(self.vertices)

    def __eq__(self, other):
        return isinstance(other, ConvexPolygon) and self.vertices == other.vertices

    def __hash__(self):
        return hash(self.vertices)

    def __repr__(self):
        return "ConvexPolygon([" + ", ".join(repr(v) for v in self.vertices) + "])"

    @property
    def n(self) -> int:
        return len(self.vertices)

    def side(self, i: int) -> Vector:
        return self[i + 1] - self[i]

    def sides(self) -> list[Vector]:
        return [self.side(i) for i in range(self.n)]

    def centroid(self) -> Point:
        """Vertex centroid (strictly interior for a strictly convex polygon)."""
        n = self.n
        return Point._raw(sum(v.x for v in self.vertices) / n,
                          sum(v.y for v in self.vertices) / n)

    def area2(self) -> Fraction:
        return sum((cross(self[i], self[i + 1]) for i in range(self.n)), _F0)

    def diameter_sq(self) -> Fraction:
        vs = self.vertices
        return max(norm_sq(a - b) for i, a in enumerate(vs) for b in vs[i + 1:])

    def translated(self, t: Vector) -> "ConvexPolygon":
        return ConvexPolygon([v + t for v in self.vertices])

    def scaled(self, s, center: Point = ORIGIN) -> "ConvexPolygon":
        s = as_fraction(s)
        if s <= 0:
            raise ValueError("scale factor must be positive")
        return ConvexPolygon([center + (v - center) * s for v in self.vertices])

    def contains(self, p: Point, strict: bool = False) -> bool:
        signs = self.side_signs(p)
        return all(s > 0 for s in signs) if strict else all(s >= 0 for s in signs)

    def dist_sq(self, p: Point) -> Fraction:
        """Exact squared Euclidean distance from p to the closed polygon."""
        signs = self.side_signs(p)
        if all(s >= 0 for s in signs):
            return _F0
        return min(point_segment_dist_sq(p, self[i], self[i + 1])
                   for i, s in enumerate(signs) if s < 0)

    # Fast exact side tests: vertices over a common denominator, so each
    # side test is a handful of integer multiplications instead of Fraction ops.
    def _side_table(self):
        if self._table is None:
            D = math.lcm(*(q.denominator for v in self.vertices for q in v))
            ints = [(int(v.x * D), int(v.y * D)) for v in self.vertices]
            rows = []
            n = len(ints)
            for i in range(n):
                ax, ay = ints[i]
                bx, by = ints[(i + 1) % n]
                dx, dy = bx - ax, by - ay
                rows.append((dx * D, dy * D, dx * ay - dy * ax))
            self._table = tuple(rows)
        return self._table

    def side_signs(self, p: Point) -> list[int]:
        """sign(cross(side_i, p - A_i)) for every side i (+1 = interior side)."""
        n1, q1 = p.x.numerator, p.x.denominator
        n2, q2 = p.y.numerator, p.y.denominator
        a, b, qq = n2 * q1, n1 * q2, q1 * q2
        out = []
        for ex, ey, c in self._side_table():
            s = ex * a - ey * b - c * qq
            out.append((s > 0) - (s < 0))
        return out


def _dedupe(points: Iterable[Point]) -> list[Point]:
    out: list[Point] = []
    for p in points:
        if not out or out[-1] != p:
            out.append(p)
    while len(out) > 1 and out[0] == out[-1]:
        out.pop()
    return out


def _drop_collinear(points: list[Point]) -> list[Point]:
    pts = _dedupe(points)
    changed = True
    while changed and len(pts) >= 3:
        changed = False
        for i in range(len(pts)):
            if orientation(pts[i - 1], pts[i], pts[(i + 1) % len(pts)]) == COLLINEAR:
                del pts[i]
                changed = True
                break
    return pts


def winding_number(cycle: Sequence[Point], z: Point) -> int:
    """Signed number of turns of the closed polyline ``cycle`` around ``z``.

    Counterclockwise turns count positively. Raises PointOnBoundary when z
    lies on one of the edges.
    """
    wn = 0
    m = len(cycle)
    for i in range(m):
        a = cycle[i]
        b = cycle[(i + 1) % m]
        o = orientation(a, b, z)
        if o == 0 and min(a.x, b.x) <= z.x <= max(a.x, b.x) \
                and min(a.y, b.y) <= z.y <= max(a.y, b.y):
            raise PointOnBoundary(f"{z!r} lies on edge {a!r} -> {b!r}")
        if a.y <= z.y:
            if b.y > z.y and o > 0:
                wn += 1
        elif b.y <= z.y and o < 0:
            wn -= 1
    return wn


def validate_polygon(points: Sequence, require_no_parallel_sides: bool = False) -> ConvexPolygon:
    """Check and normalize a vertex list into a strictly convex CCW polygon.

    Clockwise input is reversed (keeping the first vertex first). Raises
    TooFewVertices, NotConvex or, when requested, ParallelSides.
    """
    pts = [p if isinstance(p, Point) else Point(*p) for p in points]
    if len(pts) < 3:
        raise TooFewVertices(f"a polygon needs at least 3 vertices, got {len(pts)}")
    n = len(pts)
    area2 = sum((cross(pts[i], pts[(i + 1) % n]) for i in range(n)), _F0)
    if area2 < 0:
        pts = [pts[0]] + pts[:0:-1]
    for i in range(n):
        if orientation(pts[i - 1], pts[i], pts[(i + 1) % n]) != LEFT:
            raise NotConvex(f"vertex {i + 1} ({pts[i]!r}) is not a strict left turn")
    # all turns are left turns (< pi each); the edge direction must wrap past
    # angle 0 exactly once, otherwise it is a star polygon turning k > 1 times
    dirs = [pts[(i + 1) % n] - pts[i] for i in range(n)]
    upper = [d.y > 0 or (d.y == 0 and d.x > 0) for d in dirs]
    turns = sum(not upper[i] and upper[(i + 1) % n] for i in range(n))
    if turns != 1:
        raise NotConvex(f"vertex list turns {turns} times; not a simple convex polygon")
    poly = ConvexPolygon(pts)
    if require_no_parallel_sides:
        sides = poly.sides()
        for i in range(n):
            for j in range(i + 1, n):
                if cross(sides[i], sides[j]) == 0:
                    raise ParallelSides(f"sides {i + 1} and {j + 1} are parallel")
    return poly


@dataclass(frozen=True)
class Empty:
    """Result of an intersection with no interior."""

    degenerate: bool = False
    note: str = ""

    def __bool__(self):
        return False


def clip_convex(vertices: Sequence[Point], plane: HalfPlane) -> list[Point]:
    """Sutherland-Hodgman step: part of a convex vertex loop left of a line."""
    line = plane.boundary
    out: list[Point] = []
    m = len(vertices)
    if m == 0:
        return out
    sides = [line.side(v) for v in vertices]
    for i in range(m):
        cur, nxt = vertices[i], vertices[(i + 1) % m]
        sc, sn = sides[i], sides[(i + 1) % m]
        if sc >= 0:
            out.append(cur)
        if sc * sn < 0:
            d = nxt - cur
            t = cross(line.dir, line.base - cur) / cross(line.dir, d)
            out.append(cur + d * t)
    return out


def halfplane_intersection(planes: Iterable[HalfPlane], bound: ConvexPolygon):
    """Intersect the convex polygon ``bound`` with half-planes, exactly.

    Returns a ConvexPolygon, or an :class:`Empty` (with ``degenerate=True``
    when what remains is only a segment or a point).
    """
    pts = list(bound.vertices)
    for hp in planes:
        pts = clip_convex(pts, hp)
        if not pts:
            return Empty(False, "empty")
    pts = _drop_collinear(pts)
    if len(pts) < 3:
        kind = "point" if len(pts) == 1 else "segment"
        return Empty(True, f"degenerate intersection ({kind})")
    return ConvexPolygon(pts)
