"""Structure of T^2 far away from the table.

Directions of the sides of P, taken modulo a half turn and sorted by angle,
are indexed j = 0..n-1.  Everything else is indexed the same way: the line
L_j through the origin O parallel to those sides, the strip S_j around it,
and the translation vector v_j used by T^2 in the angular sector between
L_j and L_{j+1}.  The polygon R has sides m_0 v_0, ..., m_{n-1} v_{n-1},
-m_0 v_0, ... in counterclockwise order, with its first vertex on L_0.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import cmp_to_key
from numbers import Rational
from typing import Sequence

from .errors import AmbiguousOppositeVertex, OriginOutside, ParallelSides
from .geometry import (ConvexPolygon, DirectedLine, HalfPlane, Point, Vector, cross,
                       dot, norm_sq, reflect, sqrt_lower, sqrt_upper)


@dataclass(frozen=True)
class OppositePair:
    direction_index: int
    upper: int
    lower: int


@dataclass(frozen=True)
class Strip:
    """Closed strip between the line of a side and its reflection in the
    farthest vertex.  ``rays`` are the two discontinuity rays (base, dir)."""

    direction_index: int
    side_index: int
    opposite_vertex: int
    inner: HalfPlane
    outer: HalfPlane
    rays: tuple

    def contains(self, p: Point, strict: bool = True) -> bool:
        a = self.inner.boundary.side(p)
        b = self.outer.boundary.side(p)
        if strict:
            return a > 0 and b > 0
        return a >= 0 and b >= 0

    def half_width_sq(self) -> Fraction:
        d = self.inner.boundary.dir
        h = cross(d, self.outer.boundary.base - self.inner.boundary.base) / 2
        return h * h / norm_sq(d)


@dataclass(frozen=True)
class QuasiRational:
    multiples: tuple
    period: Fraction


@dataclass(frozen=True)
class NecklaceData:
    origin: Point
    directions: tuple      # canonical side directions e_j, angles in [0, pi)
    side_of_direction: tuple
    pairs: tuple
    vectors: tuple
    lines: tuple
    strips: tuple
    R: ConvexPolygon
    times: tuple

    @property
    def n(self) -> int:
        return len(self.vectors)

    def vector_index(self, w: Vector) -> int | None:
        """Signed 1-based index: +(j+1) if w == v_j, -(j+1) if w == -v_j."""
        for j, v in enumerate(self.vectors):
            if w == v:
                return j + 1
            if w == -v:
                return -(j + 1)
        return None


def _canonical(d: Vector) -> Vector:
    return d if (d.y > 0 or (d.y == 0 and d.x > 0)) else -d


def _angle_cmp(a: Vector, b: Vector) -> int:
    c = cross(a, b)
    return -1 if c > 0 else (1 if c < 0 else 0)


def side_directions(P: ConvexPolygon) -> tuple[list[Vector], list[int]]:
    """Canonical side directions sorted by angle in [0, pi), with side indices."""
    sides = P.sides()
    order = sorted(range(P.n), key=cmp_to_key(
        lambda i, k: _angle_cmp(_canonical(sides[i]), _canonical(sides[k]))))
    dirs = [_canonical(sides[k]) for k in order]
    for j in range(len(dirs) - 1):
        if cross(dirs[j], dirs[j + 1]) == 0:
            raise ParallelSides(
                f"sides {order[j] + 1} and {order[j + 1] + 1} are parallel")
    return dirs, order


def _next_direction(dirs: Sequence[Vector], j: int) -> Vector:
    return dirs[j + 1] if j + 1 < len(dirs) else -dirs[0]


def opposite_pairs(P: ConvexPolygon) -> list[OppositePair]:
    """Antipodal vertex pairs, one per angular interval of directions.

    For a direction u strictly between e_j and e_{j+1}, ``upper`` maximizes
    cross(u, A) over the vertices and ``lower`` minimizes it.  Rotating
    calipers: crossing a side direction moves exactly one of the two.
    """
    dirs, side_of = side_directions(P)
    n = P.n
    u = dirs[0] + dirs[1]
    vals = [cross(u, A) for A in P.vertices]
    upper = max(range(n), key=vals.__getitem__)
    lower = min(range(n), key=vals.__getitem__)
    pairs = [OppositePair(0, upper, lower)]
    for j in range(1, n + 1):
        e = dirs[j] if j < n else -dirs[0]
        k = side_of[j % n]
        d = P.side(k)
        if dot(d, e) > 0:
            assert lower == k, "calipers lost the lower vertex"
            lower = (k + 1) % n
        else:
            assert upper == k, "calipers lost the upper vertex"
            upper = (k + 1) % n
        if j < n:
            pairs.append(OppositePair(j, upper, lower))
    # a half turn later the pair is the first one swapped
    assert (upper, lower) == (pairs[0].lower, pairs[0].upper)
    return pairs


def translation_vectors(P: ConvexPolygon, pairs=None) -> list[Vector]:
    if pairs is None:
        pairs = opposite_pairs(P)
    return [(P.vertices[p.upper] - P.vertices[p.lower]) * 2 for p in pairs]


def strips(P: ConvexPolygon) -> list[Strip]:
    dirs, side_of = side_directions(P)
    out = []
    for j, k in enumerate(side_of):
        a = P.vertices[k]
        d = P.side(k)
        dists = [cross(d, A - a) for A in P.vertices]
        far = max(dists)
        hits = [i for i, h in enumerate(dists) if h == far]
        if len(hits) != 1:
            raise AmbiguousOppositeVertex(
                f"vertices {[h + 1 for h in hits]} are equally far from side {k + 1}")
        o = hits[0]
        mirror = reflect(a, P.vertices[o])
        out.append(Strip(
            direction_index=j, side_index=k, opposite_vertex=o,
            inner=HalfPlane(DirectedLine(a, d), closed=True),
            outer=HalfPlane(DirectedLine(mirror, -d), closed=True),
            rays=((a, -d), (mirror, d)),
        ))
    return out


def _chain(origin: Point, dirs: Sequence[Vector], vectors: Sequence[Vector], start=1):
    """Run the chain construction from origin + start*e_0.

    Returns the 2n chain vertices and the raw parameters t_j with
    side_j = t_j v_j.  Raises AssertionError if the chain does not close.
    """
    n = len(dirs)
    lam = Fraction(start)
    pts = [origin + dirs[0] * lam]
    ts = []
    for j in range(n):
        e, e_next, v = dirs[j], _next_direction(dirs, j), vectors[j]
        t = -lam * cross(e, e_next) / cross(v, e_next)
        lam = lam * cross(e, v) / cross(e_next, v)
        ts.append(t)
        pts.append(origin + e_next * lam)
    assert lam == start, "chain construction failed to close after n sides"
    for j in range(n - 1):
        pts.append(pts[-1] - vectors[j] * ts[j])
    return pts, ts


def normalize_times(ts: Sequence[Fraction]) -> tuple:
    """Scale positive rationals to coprime integers (as Fractions)."""
    L = math.lcm(*(Fraction(t).denominator for t in ts))
    ints = [int(Fraction(t) * L) for t in ts]
    g = math.gcd(*ints)
    return tuple(Fraction(i // g) for i in ints)


def times(R: ConvexPolygon, vectors: Sequence[Vector]) -> tuple:
    """Exact ratios side_j / v_j of R, normalized to coprime integers."""
    raw = []
    for j, v in enumerate(vectors):
        s = R.side(j)
        if cross(s, v) != 0:
            raise ValueError(f"side {j + 1} of R is not parallel to v_{j + 1}")
        raw.append(dot(s, v) / norm_sq(v))
    if any(t <= 0 for t in raw):
        raise ValueError("R is not traversed along the translation vectors")
    return normalize_times(raw)


def quasi_rationality(ts) -> QuasiRational | None:
    """t_i = m_i * period with coprime integers m_i, or None if not certifiable."""
    if not ts or not all(isinstance(t, Rational) for t in ts):
        return None
    ts = [Fraction(t) for t in ts]
    if any(t <= 0 for t in ts):
        raise ValueError("times must be positive")
    m = normalize_times(ts)
    return QuasiRational(tuple(int(x) for x in m), ts[0] / m[0])


def polygon_from_sides(first: Point, sides: Sequence[Vector]) -> ConvexPolygon:
    pts = [first]
    for s in sides[:-1]:
        pts.append(pts[-1] + s)
    assert pts[-1] + sides[-1] == first, "side vectors do not close"
    return ConvexPolygon(pts)


def necklace_polygon(P: ConvexPolygon, origin: Point | None = None, vectors=None) -> ConvexPolygon:
    """The centrally symmetric 2n-gon R at its canonical scale.

    The chain construction fixes R up to dilation; R is then rescaled so its
    sides are m_j v_j with coprime integer times m_j.
    """
    if origin is None:
        origin = P.centroid()
    if not P.contains(origin, strict=True):
        raise OriginOutside(f"origin {origin!r} is not strictly inside the polygon")
    dirs, _ = side_directions(P)
    if vectors is None:
        vectors = translation_vectors(P)
    _, raw = _chain(origin, dirs, vectors)
    m = normalize_times(raw)
    half = sum((v * t for v, t in zip(vectors, m)), Point(0, 0))
    first = origin - half / 2
    sides = [v * t for v, t in zip(vectors, m)] + [-(v * t) for v, t in zip(vectors, m)]
    return polygon_from_sides(first, sides)


def necklace(P: ConvexPolygon, origin: Point | None = None) -> NecklaceData:
    """Everything T^2 looks like from far away, computed exactly."""
    if origin is None:
        origin = P.centroid()
    dirs, side_of = side_directions(P)
    pairs = opposite_pairs(P)
    vectors = translation_vectors(P, pairs)
    R = necklace_polygon(P, origin, vectors)
    return NecklaceData(
        origin=origin,
        directions=tuple(dirs),
        side_of_direction=tuple(side_of),
        pairs=tuple(pairs),
        vectors=tuple(vectors),
        lines=tuple(DirectedLine(origin, e) for e in dirs),
        strips=tuple(strips(P)),
        R=R,
        times=times(R, vectors),
    )


def far_field_radius(P: ConvexPolygon, nd: NecklaceData) -> Fraction:
    """Radius about O beyond which every T^2 step is one of the +-v_j.

    Two bounds, the larger is returned: the crude
    4 n (max strip half-width + max |v_j|), and an angular one
    2D + 12D / sin(gamma) where D bounds |A - O| and gamma is the smallest
    angle between consecutive side directions.  Beyond the angular bound the
    directions of both support lines of a T^2 step lie within an arc that
    contains at most one side direction, which forces an antipodal pair.
    """
    n = nd.n
    hw = sqrt_upper(max(s.half_width_sq() for s in nd.strips))
    vmax = sqrt_upper(max(norm_sq(v) for v in nd.vectors))
    crude = (hw + vmax) * n * 4
    D = sqrt_upper(max(norm_sq(A - nd.origin) for A in P.vertices))
    dirs = nd.directions
    sin_sq = min(
        cross(dirs[j], _next_direction(dirs, j)) ** 2
        / (norm_sq(dirs[j]) * norm_sq(_next_direction(dirs, j)))
        for j in range(n))
    digits = 6
    s = sqrt_lower(sin_sq, digits)
    while s == 0:
        digits += 6
        s = sqrt_lower(sin_sq, digits)
    angular = 2 * D + 12 * D / s
    return max(crude, angular)
