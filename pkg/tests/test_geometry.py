from fractions import Fraction as F

import pytest
from hypothesis import given, strategies as st

from outer_billiards import (COLLINEAR, LEFT, RIGHT, ConvexPolygon, DirectedLine, Empty,
                             HalfPlane, Point, halfplane_intersection, orientation, reflect,
                             validate_polygon, winding_number)
from outer_billiards.errors import NotConvex, ParallelSides, PointOnBoundary, TooFewVertices
from outer_billiards.geometry import as_fraction, cross, sqrt_lower, sqrt_upper

from oracles import inside_convex

rationals = st.fractions(min_value=-50, max_value=50, max_denominator=30)
points = st.builds(Point, rationals, rationals)

UNIT = ConvexPolygon([Point(0, 0), Point(1, 0), Point(1, 1), Point(0, 1)])


def test_orientation_examples():
    assert orientation(Point(0, 0), Point(1, 0), Point(0, 1)) == LEFT
    assert orientation(Point(0, 0), Point(1, 0), Point(2, 0)) == COLLINEAR
    assert orientation(Point(0, 0), Point(1, 1), Point(2, 1)) == RIGHT


@given(points, points, points)
def test_orientation_antisymmetric(a, b, c):
    assert orientation(a, b, c) == -orientation(b, a, c)
    assert orientation(a, b, c) == orientation(b, c, a)


def test_floats_rejected():
    with pytest.raises(TypeError):
        Point(0.5, 1)
    with pytest.raises((TypeError, ValueError)):
        as_fraction("1.5")
    assert Point("3/4", 2).x == F(3, 4)


def test_validate_examples():
    P = validate_polygon([(0, 0), (1, 0), (0, 1)])
    assert P.n == 3
    with pytest.raises(ParallelSides):
        validate_polygon([(0, 0), (1, 0), (1, 1), (0, 1)], require_no_parallel_sides=True)
    Q = validate_polygon([(0, 0), (2, 0), (1, 3), (0, 2)], require_no_parallel_sides=True)
    sides = Q.sides()
    assert all(cross(sides[i], sides[j]) != 0 for i in range(4) for j in range(i + 1, 4))


def test_validate_reverses_clockwise_input():
    P = validate_polygon([(0, 0), (0, 1), (1, 0)])
    assert P.vertices == (Point(0, 0), Point(1, 0), Point(0, 1))
    assert P.area2() > 0
    with pytest.raises(TooFewVertices):
        validate_polygon([(0, 0), (1, 1)])
    with pytest.raises(NotConvex):
        validate_polygon([(0, 0), (4, 0), (1, 1), (0, 4)])
    with pytest.raises(NotConvex):
        validate_polygon([(0, 0), (1, 0), (1, 0), (0, 1)])
    with pytest.raises(NotConvex):
        # pentagram: every turn is a left turn but it winds twice
        validate_polygon([(10, 0), (-8, 6), (3, -10), (3, 10), (-8, -6)])


def test_reflect_examples():
    assert reflect(Point(2, 1), Point(0, 0)) == Point(-2, -1)
    assert reflect(Point(3, 5), Point(3, 5)) == Point(3, 5)
    assert reflect(Point(F(1, 2), F(1, 3)), Point(1, 1)) == Point(F(3, 2), F(5, 3))


@given(points, points)
def test_reflect_involution(x, c):
    assert reflect(reflect(x, c), c) == x


def test_halfplane_intersection_examples():
    assert halfplane_intersection([], UNIT) == UNIT
    x_ge_2 = HalfPlane(DirectedLine(Point(2, 0), Point(0, -1)))
    assert isinstance(halfplane_intersection([x_ge_2], UNIT), Empty)
    x_ge = HalfPlane(DirectedLine(Point(F(1, 4), 0), Point(0, -1)))
    y_ge = HalfPlane(DirectedLine(Point(0, F(1, 4)), Point(1, 0)))
    got = halfplane_intersection([x_ge, y_ge], UNIT)
    want = [Point(F(1, 4), F(1, 4)), Point(1, F(1, 4)), Point(1, 1), Point(F(1, 4), 1)]
    assert set(got.vertices) == set(want)


@given(st.lists(st.tuples(points, points), max_size=5), points)
def test_halfplane_intersection_membership(lines, z):
    # a point of the box is in the result iff it satisfies every closed half-plane
    planes = [HalfPlane(DirectedLine(a, b - a), closed=True) for a, b in lines if a != b]
    box = ConvexPolygon([Point(-60, -60), Point(60, -60), Point(60, 60), Point(-60, 60)])
    got = halfplane_intersection(planes, box)
    inside = all(h.contains(z) for h in planes)
    if isinstance(got, Empty):
        assert not (inside and box.contains(z, strict=True)) or got.degenerate
    elif inside and got.n >= 3:
        assert got.contains(z)


def test_winding_examples():
    sq = [Point(0, 0), Point(1, 0), Point(1, 1), Point(0, 1)]
    c = Point(F(1, 2), F(1, 2))
    assert winding_number(sq, c) == 1
    assert winding_number(sq[::-1], c) == -1
    assert winding_number(sq + sq, c) == 2
    with pytest.raises(PointOnBoundary):
        winding_number(sq, Point(1, F(1, 3)))


@given(st.lists(points, min_size=3, max_size=8, unique=True), points)
def test_winding_matches_convex_containment(pts, z):
    try:
        P = validate_polygon(pts)
    except ValueError:
        return
    want = inside_convex([(v.x, v.y) for v in P.vertices], (z.x, z.y))
    if want is None:
        with pytest.raises(PointOnBoundary):
            winding_number(P.vertices, z)
    else:
        assert winding_number(P.vertices, z) == want
        assert winding_number(P.vertices[::-1], z) == -want


@given(st.fractions(min_value=0, max_value=10 ** 6, max_denominator=1000))
def test_sqrt_bounds(q):
    lo, hi = sqrt_lower(q), sqrt_upper(q)
    assert lo * lo <= q <= hi * hi
    assert hi - lo <= F(1, 10 ** 5) * max(1, hi)
