"""The outer billiard map T about a convex polygon, and its square.

Convention: from an exterior point x the map reflects x in the vertex v such
that every other vertex of P lies strictly to the LEFT of the directed line
x -> v.  Far from P this makes T^2 move points clockwise.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import NamedTuple

from .errors import InsidePolygon, OnSingularRay, UndefinedMap
from .geometry import ConvexPolygon, Point, reflect

COMPLETED = "completed"
UNDEFINED = "undefined"
PERIODIC = "periodic"


class StepOutcome(NamedTuple):
    image: Point
    vertex_index: int


def support_vertex(P: ConvexPolygon, x: Point) -> int:
    """Index of the vertex T reflects ``x`` in.

    A vertex w qualifies when x is strictly outside the line of side w-1 and
    strictly inside the line of side w.  If x is on the inner line instead,
    the support line contains side w and the map is undefined.
    """
    signs = P.side_signs(x)
    if min(signs) >= 0:
        raise InsidePolygon(f"{x!r} is in the closed polygon", point=x)
    n = len(signs)
    for w in range(n):
        if signs[w - 1] < 0 and signs[w] >= 0:
            if signs[w] == 0:
                raise OnSingularRay(
                    f"{x!r} lies on the extension of side {w + 1} through vertex {w + 1}",
                    point=x)
            return w
    raise AssertionError("no support vertex found for an exterior point")  # pragma: no cover


def step_T(P: ConvexPolygon, x: Point) -> StepOutcome:
    v = support_vertex(P, x)
    return StepOutcome(reflect(x, P.vertices[v]), v)


def step_T2(P: ConvexPolygon, x: Point) -> tuple[Point, tuple[int, int]]:
    """Two steps of T; the image differs from x by 2(A_second - A_first)."""
    try:
        y, i = step_T(P, x)
    except UndefinedMap as exc:
        exc.step = 0
        raise
    try:
        z, j = step_T(P, y)
    except UndefinedMap as exc:
        exc.step = 1
        raise
    return z, (i, j)


@dataclass
class Trajectory:
    points: list[Point]
    itinerary: list = field(default_factory=list)
    status: str = COMPLETED
    period: int | None = None
    failed_step: int | None = None

    def __post_init__(self):
        assert len(self.itinerary) == len(self.points) - 1


def iterate(P: ConvexPolygon, x: Point, max_steps: int, use_T2: bool = False) -> Trajectory:
    """Apply T (or T^2) up to ``max_steps`` times from an exterior point.

    Stops early on an exact return to ``x`` (status PERIODIC) or when the map
    is undefined (status UNDEFINED, ``failed_step`` = index of the step).
    Itinerary entries are vertex indices, or index pairs for T^2.
    """
    if P.contains(x):
        raise InsidePolygon(f"{x!r} is in the closed polygon", point=x)
    step = step_T2 if use_T2 else step_T
    points = [x]
    itinerary = []
    cur = x
    for k in range(max_steps):
        try:
            cur, label = step(P, cur)
        except UndefinedMap:
            return Trajectory(points, itinerary, UNDEFINED, failed_step=k)
        points.append(cur)
        itinerary.append(label)
        if cur == x:
            return Trajectory(points, itinerary, PERIODIC, period=k + 1)
    return Trajectory(points, itinerary)


def detect_period(P: ConvexPolygon, x: Point, max_steps: int) -> int | None:
    """Minimal m <= max_steps with T^(2m)(x) == x exactly, else None."""
    cur = x
    for m in range(1, max_steps + 1):
        try:
            cur, _ = step_T2(P, cur)
        except UndefinedMap:
            return None
        if cur == x:
            return m
    return None
