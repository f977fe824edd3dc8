"""Stability, periodic cells and density of necklace orbits.

A T-itinerary (the sequence of vertices reflected in) is stored as a
:class:`CyclicWord` of 0-based vertex indices.  Positions are counted from 1,
so the first letter sits at an odd position.
"""
from __future__ import annotations

import random
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .asymptotics import NecklaceData
from .billiard import step_T, step_T2
from .errors import (NotAnOrbit, NotPeriodic, NotConvex, OddLength, OnDiscontinuity,
                     PerturbationBreaksConvexity, UndefinedMap)
from .geometry import (ConvexPolygon, DirectedLine, Empty, HalfPlane, Point, Vector,
                       halfplane_intersection, validate_polygon)
from .orbits import _q_polygon, check_strips, lattice_cycle, verify_orbit


@dataclass(frozen=True)
class CyclicWord:
    letters: tuple

    def __post_init__(self):
        object.__setattr__(self, "letters", tuple(int(a) for a in self.letters))

    def __len__(self):
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def rotated(self, k: int) -> "CyclicWord":
        k %= max(len(self.letters), 1)
        return CyclicWord(self.letters[k:] + self.letters[:k])

    def __str__(self):
        return " ".join(f"A{a + 1}" for a in self.letters)


@dataclass(frozen=True)
class Stability:
    stable: bool
    letter: int | None = None
    odd_count: int = 0
    even_count: int = 0

    def __bool__(self):
        return self.stable


def _as_word(W) -> CyclicWord:
    return W if isinstance(W, CyclicWord) else CyclicWord(tuple(W))


def stability_check(W) -> Stability:
    """Each letter must occur as often at odd positions as at even ones.

    Returns the first unbalanced letter (in order of first appearance)
    together with its odd and even counts when the word is unstable.
    """
    W = _as_word(W)
    if len(W) % 2:
        raise OddLength(f"word of odd length {len(W)}")
    odd = Counter(W.letters[0::2])
    even = Counter(W.letters[1::2])
    for a in dict.fromkeys(W.letters):
        if odd[a] != even[a]:
            return Stability(False, a, odd[a], even[a])
    return Stability(True)


@dataclass(frozen=True)
class Composition:
    """The isometry x -> sign * x + offset obtained from a word of reflections."""

    kind: str               # "identity", "translation" or "reflection"
    vector: Vector          # translation vector, or centre of the reflection

    @property
    def is_identity(self) -> bool:
        return self.kind == "identity"


def _compose(P: ConvexPolygon, letters: Sequence[int]):
    s, c = 1, Point(0, 0)
    for a in letters:
        A = P.vertices[a]
        s, c = -s, A * 2 - c
    return s, c


def word_composition(P: ConvexPolygon, W, allow_odd: bool = False) -> Composition:
    """Compose the point reflections of the word in order, exactly."""
    W = _as_word(W)
    if len(W) % 2 and not allow_odd:
        raise OddLength(f"word of odd length {len(W)} composes to a point reflection")
    s, c = _compose(P, W.letters)
    if s == -1:
        return Composition("reflection", c / 2)
    return Composition("identity" if not c else "translation", c)


def itinerary_constraints(P: ConvexPolygon, W) -> list[tuple[HalfPlane, int]]:
    """Open half-planes (with their step) on which T follows the word W.

    Step i requires T^i(x) strictly outside the line of side w-1 and strictly
    inside the line of side w, where w = W[i]; both conditions are pulled
    back through the reflections applied before step i.
    """
    W = _as_word(W)
    out = []
    s, c = 1, Point(0, 0)
    for i, w in enumerate(W.letters):
        A = P.vertices[w]
        for line in (DirectedLine(A, P.side(w)), DirectedLine(A, -P.side(w - 1))):
            if s == 1:
                pulled = DirectedLine(line.base - c, line.dir)
            else:
                pulled = DirectedLine(c - line.base, -line.dir)
            out.append((HalfPlane(pulled, closed=False), i))
        s, c = -s, A * 2 - c
    return out


def _l1(v: Vector) -> Fraction:
    return abs(v.x) + abs(v.y)


def _box(center: Point, r: Fraction) -> ConvexPolygon:
    return ConvexPolygon([center + Point(-r, -r), center + Point(r, -r),
                          center + Point(r, r), center + Point(-r, r)])


def _span(P: ConvexPolygon) -> Fraction:
    vs = P.vertices
    return max(_l1(a - b) for a in vs for b in vs)


def t_word(P: ConvexPolygon, x: Point, steps: int) -> list[int]:
    word = []
    cur = x
    for _ in range(steps):
        cur, v = step_T(P, cur)
        word.append(v)
    return word


@dataclass(frozen=True)
class PeriodicCell:
    cell: ConvexPolygon
    period: int             # T^2-period
    t_period: int           # length of the word: 2 * period
    word: CyclicWord
    point: Point
    constraints: tuple = field(repr=False, default=())

    def contains(self, p: Point) -> bool:
        return self.cell.contains(p, strict=True)

    def wall_steps(self, i: int) -> list[int]:
        """Steps whose constraint line carries edge i of the cell."""
        a, b = self.cell[i], self.cell[i + 1]
        return sorted({step for hp, step in self.constraints
                       if hp.boundary.side(a) == 0 and hp.boundary.side(b) == 0})


def periodic_cell(P: ConvexPolygon, x: Point, t2_period: int, bound: ConvexPolygon | None = None) -> PeriodicCell:
    """Open convex polygon of points sharing the T-itinerary of the periodic point x.

    All of them return under T^2 after exactly ``t2_period`` steps.
    """
    cur = x
    for m in range(1, t2_period + 1):
        try:
            cur, _ = step_T2(P, cur)
        except UndefinedMap as exc:
            raise OnDiscontinuity(f"orbit of {x!r} hits the undefined set") from exc
        if cur == x and m < t2_period:
            raise NotPeriodic(f"{x!r} has T^2-period {m}, not {t2_period}")
    if cur != x:
        raise NotPeriodic(f"{x!r} does not return after {t2_period} steps of T^2")
    word = CyclicWord(tuple(t_word(P, x, 2 * t2_period)))
    cons = itinerary_constraints(P, word)
    if not all(hp.contains(x) for hp, _ in cons):
        raise OnDiscontinuity(f"{x!r} lies on a boundary of its itinerary region")
    if bound is None:
        r = 4 * (_span(P) + max(_l1(cur - x) for cur in _orbit_steps(P, x, t2_period)))
        bound = _box(x, r)
    cell = halfplane_intersection([hp for hp, _ in cons], bound)
    if isinstance(cell, Empty):  # pragma: no cover - x is strictly inside every constraint
        raise OnDiscontinuity(f"empty cell around {x!r}: {cell.note}")
    return PeriodicCell(cell, t2_period, 2 * t2_period, word, x, tuple(cons))


def _orbit_steps(P, x, t2_period):
    cur = x
    for _ in range(t2_period):
        nxt, _ = step_T2(P, cur)
        yield nxt - cur
        cur = nxt


def sample_interior(cell: ConvexPolygon, count: int, rng: random.Random, scale: int = 1000) -> list[Point]:
    """Rational points strictly inside a convex polygon (positive vertex weights)."""
    out = []
    for _ in range(count):
        w = [rng.randint(1, scale) for _ in cell.vertices]
        total = sum(w)
        x = sum((Fraction(wi, total) * v.x for wi, v in zip(w, cell.vertices)), Fraction(0))
        y = sum((Fraction(wi, total) * v.y for wi, v in zip(w, cell.vertices)), Fraction(0))
        out.append(Point(x, y))
    return out


@dataclass(frozen=True)
class TrialResult:
    trial: int
    success: bool
    point: Point | None = None
    reason: str = ""


@dataclass(frozen=True)
class RetraceReport:
    magnitude: Fraction
    word: CyclicWord
    trials: tuple

    @property
    def successes(self) -> int:
        return sum(t.success for t in self.trials)


def perturb_polygon(P: ConvexPolygon, magnitude, rng: random.Random, resolution: int = 10 ** 6) -> ConvexPolygon:
    """Move every vertex by a rational offset of norm at most ``magnitude``."""
    magnitude = Fraction(magnitude)
    pts = []
    for v in P.vertices:
        dx = magnitude * Fraction(rng.randint(-resolution, resolution), 2 * resolution)
        dy = magnitude * Fraction(rng.randint(-resolution, resolution), 2 * resolution)
        pts.append(v + Point(dx, dy))
    try:
        return validate_polygon(pts)
    except NotConvex as exc:
        raise PerturbationBreaksConvexity(str(exc)) from exc


def retrace(P: ConvexPolygon, W, near: Point | None = None) -> TrialResult:
    """Find a periodic point of P whose T-itinerary is the word W."""
    W = _as_word(W)
    comp = word_composition(P, W)
    if not comp.is_identity:
        return TrialResult(-1, False, reason=f"word composes to a translation by {comp.vector!r}")
    if near is None:
        near = P.centroid()
    r = (len(W) + 2) * 2 * _span(P) + _span(P)
    cell = halfplane_intersection([hp for hp, _ in itinerary_constraints(P, W)], _box(near, r))
    if isinstance(cell, Empty):
        return TrialResult(-1, False, reason="no point realizes the word (" + cell.note + ")")
    x = cell.centroid()
    try:
        got = t_word(P, x, len(W))
    except UndefinedMap as exc:  # pragma: no cover - x is interior to every constraint
        return TrialResult(-1, False, x, f"undefined: {exc}")
    cur = x
    for a in W.letters:
        cur = P.vertices[a] * 2 - cur
    if tuple(got) != W.letters or cur != x:
        return TrialResult(-1, False, x, "itinerary not realized")
    return TrialResult(-1, True, x)


def perturb_and_retrace(P: ConvexPolygon, magnitude, word, trials: int, seed: int,
                        near: Point | None = None) -> RetraceReport:
    """Perturb P ``trials`` times and look for an orbit with the same word each time."""
    magnitude = Fraction(magnitude)
    if magnitude < 0:
        raise ValueError("magnitude must be nonnegative")
    W = _as_word(word)
    rng = random.Random(seed)
    results = []
    for i in range(trials):
        Pi = perturb_polygon(P, magnitude, rng) if magnitude else P
        r = retrace(Pi, W, near)
        results.append(TrialResult(i, r.success, r.point, r.reason))
    return RetraceReport(magnitude, W, tuple(results))


@dataclass(frozen=True)
class DensityReport:
    K: int
    admissible: tuple
    simulated: bool

    @property
    def fraction(self) -> Fraction | None:
        """Share of admissible k among 1..K; None for an empty scan."""
        return Fraction(len(self.admissible), self.K) if self.K else None

    @property
    def smallest(self) -> int | None:
        return self.admissible[0] if self.admissible else None


def density_scan(P: ConvexPolygon, nd: NecklaceData, K: int, simulate: bool = False) -> DensityReport:
    """Admissible scales k = 1..K along the exact progression p = k m.

    A scale is admissible when every corner of Q(k m) is strictly inside its
    strip; with ``simulate`` the whole cycle must also certify as a T^2 orbit.
    """
    m = [int(t) for t in nd.times]
    ok = []
    for k in range(1, K + 1):
        p = [k * x for x in m]
        Q = _q_polygon(nd, p)
        if not check_strips(Q, nd.strips):
            continue
        if simulate:
            try:
                verify_orbit(P, lattice_cycle(nd, Q, p), nd)
            except NotAnOrbit:
                continue
        ok.append(k)
    return DensityReport(K, tuple(ok), simulate)
