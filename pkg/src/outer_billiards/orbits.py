"""Necklace orbits: construction of Q(p), exact search and certification.

For rational tables the times t_j are rational, so p = k * m (m the coprime
integer times) puts every corner of Q(p) exactly on the lines L_j, deep in
the strips.  Candidates are taken for k = 1, 2, ... and each one is
certified by replaying T^2 on every lattice point of the cycle.
"""
from __future__ import annotations

from dataclasses import dataclass, replace
from fractions import Fraction
from typing import Sequence

import numpy as np

from .asymptotics import NecklaceData, polygon_from_sides
from .billiard import step_T
from .errors import (NotAnOrbit, PrecisionInsufficient, SearchExhausted,
                     UndefinedHit, UndefinedMap)
from .geometry import (ConvexPolygon, Point, as_fraction, cross, norm_sq,
                       point_segment_dist_sq, winding_number)

DEFAULT_CAP = 10 ** 6


@dataclass(frozen=True)
class OrbitSpec:
    p: tuple
    origin: Point

    def __post_init__(self):
        if any(int(x) != x or x < 1 for x in self.p):
            raise ValueError(f"p must be positive integers, got {self.p}")
        object.__setattr__(self, "p", tuple(int(x) for x in self.p))


@dataclass(frozen=True)
class OrbitCertificate:
    spec: OrbitSpec
    cycle: tuple            # lattice points of Q in T^2 order
    t2_period: int
    t_period: int
    rotation_number: int
    word: tuple             # T-itinerary over one T-period (0-based vertices)
    min_distance_sq: Fraction


@dataclass(frozen=True)
class StripCheck:
    passed: bool
    corner: int | None = None
    strip: int | None = None

    def __bool__(self):
        return self.passed


def _q_polygon(nd: NecklaceData, p: Sequence[int]) -> ConvexPolygon:
    sides = [v * k for v, k in zip(nd.vectors, p)]
    sides += [-s for s in sides]
    half = sum(sides[:nd.n], Point(0, 0))
    return polygon_from_sides(nd.origin - half / 2, sides)


def lattice_cycle(nd: NecklaceData, Q: ConvexPolygon, p: Sequence[int]) -> list[Point]:
    ccw = []
    for j, corner in enumerate(Q.vertices):
        step = nd.vectors[j % nd.n] * (1 if j < nd.n else -1)
        cur = corner
        for _ in range(p[j % nd.n]):
            ccw.append(cur)
            cur = cur + step
    return [ccw[0]] + ccw[:0:-1]


def build_Q(nd: NecklaceData, spec: OrbitSpec) -> tuple[ConvexPolygon, list[Point]]:
    """The 2n-gon with sides p_j v_j centred at the origin, and its lattice cycle.

    The cycle starts at the first corner and runs clockwise, the direction in
    which T^2 moves points; it holds 2 * sum(p) points.
    """
    if len(spec.p) != nd.n:
        raise ValueError(f"need {nd.n} integers, got {len(spec.p)}")
    if spec.origin != nd.origin:
        nd = _recentred(nd, spec.origin)
    Q = _q_polygon(nd, spec.p)
    return Q, lattice_cycle(nd, Q, spec.p)


def _recentred(nd: NecklaceData, origin: Point) -> NecklaceData:
    return replace(nd, origin=origin)


def check_strips(Q: ConvexPolygon, strips) -> StripCheck:
    """Corners j and j+n of Q must lie strictly inside strip S_j."""
    n = len(strips)
    for j, strip in enumerate(strips):
        for c in (j, j + n):
            if not strip.contains(Q.vertices[c], strict=True):
                return StripCheck(False, c, j)
    return StripCheck(True)


def boundary_dist_sq(Q: ConvexPolygon, P: ConvexPolygon) -> Fraction:
    """Squared distance between the boundary of Q and P, for P inside Q."""
    best = None
    for i in range(Q.n):
        a, b = Q[i], Q[i + 1]
        cands = [P.dist_sq(a)]
        cands += [point_segment_dist_sq(A, a, b) for A in P.vertices]
        d = min(cands)
        best = d if best is None else min(best, d)
    return best


def verify_orbit(P: ConvexPolygon, cycle: Sequence[Point], nd: NecklaceData) -> OrbitCertificate:
    """Replay T^2 along ``cycle`` and return the certificate it proves.

    Raises NotAnOrbit at the first step whose image differs from the next
    cycle point, UndefinedHit if the map is undefined on the way.
    """
    cycle = tuple(cycle)
    N = len(cycle)
    if N == 0:
        raise NotAnOrbit("empty cycle")
    word = []
    counts = {}
    cur = cycle[0]
    for j in range(N):
        start = cur
        for half in range(2):
            try:
                cur, v = step_T(P, cur)
            except UndefinedMap as exc:
                raise UndefinedHit(f"map undefined at T^2 step {j} (T step {half}): {exc}",
                                   step=j, expected=cycle[(j + 1) % N], found=cur) from exc
            word.append(v)
        expected = cycle[(j + 1) % N]
        if cur != expected:
            raise NotAnOrbit(f"T^2 step {j}: expected {expected!r}, got {cur!r}",
                             step=j, expected=expected, found=cur)
        key = nd.vector_index(cur - start)
        if key is None:
            raise NotAnOrbit(f"T^2 step {j} translates by {cur - start!r}, "
                             "not one of the necklace vectors", step=j)
        counts[key] = counts.get(key, 0) + 1
    if len(set(cycle)) != N:
        raise NotAnOrbit("cycle repeats a point before closing; period is not minimal")
    p = []
    for j in range(1, nd.n + 1):
        plus, minus = counts.get(j, 0), counts.get(-j, 0)
        if plus != minus or plus == 0:
            raise NotAnOrbit(f"translation v_{j} used {plus} times forward and "
                             f"{minus} times backward; not a necklace orbit")
        p.append(plus)
    rotation = -winding_number(cycle, nd.origin)
    return OrbitCertificate(
        spec=OrbitSpec(tuple(p), nd.origin),
        cycle=cycle,
        t2_period=N,
        t_period=2 * N,
        rotation_number=rotation,
        word=tuple(word),
        min_distance_sq=min(P.dist_sq(x) for x in cycle),
    )


def find_orbit(P: ConvexPolygon, nd: NecklaceData, min_scale=0, cap: int = DEFAULT_CAP,
               start_k: int = 1) -> OrbitCertificate:
    """Smallest k >= start_k whose candidate Q(k m) is a certified T^2 orbit.

    A candidate is simulated only once its corners pass the strip test and
    its boundary stays farther than ``min_scale`` from P; candidates close
    to the table can fail the simulation, in which case the search moves on.
    """
    min_scale = as_fraction(min_scale)
    if min_scale < 0:
        raise ValueError("min_scale must be nonnegative")
    m = [int(t) for t in nd.times]
    limit_sq = min_scale * min_scale
    # inradius of Q(m) about O; Q(k m) cannot clear min_scale before k * r1 > min_scale
    Q1 = _q_polygon(nd, m)
    r1_sq = min(cross(Q1.side(i), nd.origin - Q1[i]) ** 2 / norm_sq(Q1.side(i))
                for i in range(Q1.n))
    rejected = []
    for k in range(start_k, cap + 1):
        if min_scale and k * k * r1_sq <= limit_sq:
            continue
        p = tuple(k * x for x in m)
        Q = _q_polygon(nd, p)
        if not check_strips(Q, nd.strips):
            rejected.append((k, "strips"))
            continue
        if min_scale and boundary_dist_sq(Q, P) <= limit_sq:
            continue
        try:
            cert = verify_orbit(P, lattice_cycle(nd, Q, p), nd)
        except NotAnOrbit as exc:
            rejected.append((k, str(exc)))
            continue
        if min_scale and cert.min_distance_sq <= limit_sq:
            continue
        return cert
    raise SearchExhausted(
        f"no certified orbit for k <= {cap}",
        diagnostics={"times": m, "cap": cap, "rejected": rejected[-10:]})


def approx_search(t: Sequence[float], delta: float, q_min: float, precision: float = 0.0,
                  chunk: int = 1 << 16, max_q: float | None = None):
    """Smallest grid scale q >= q_min with max_i |q t_i - round(q t_i)| < delta.

    ``precision`` is an absolute error bound on every t_i.  A candidate is
    accepted only when its residual plus the propagated error q * precision
    stays below delta, so the answer holds for the true times too.  The grid
    step delta / (2 max t) guarantees a near return is never stepped over.
    """
    t = np.asarray(t, dtype=float)
    if delta <= 0:
        raise ValueError("delta must be positive")
    if np.any(t <= 0):
        raise ValueError("times must be positive")
    h = delta / (2 * t.max())
    eps = np.finfo(float).eps
    i0 = 0
    while True:
        q = q_min + h * np.arange(i0, i0 + chunk)
        slack = q * (precision + 4 * eps * t.max()) + 4 * eps
        if slack[0] >= delta:
            raise PrecisionInsufficient(
                f"times known to {precision:g} cannot certify residual {delta:g} at q={q[0]:g}")
        qt = np.outer(q, t)
        res = np.abs(qt - np.rint(qt)).max(axis=1) + slack
        hit = np.flatnonzero(res < delta)
        if hit.size:
            qq = float(q[hit[0]])
            return qq, [int(v) for v in np.rint(qq * t)]
        i0 += chunk
        if max_q is not None and q[-1] > max_q:
            raise SearchExhausted(f"no scale below {max_q}")
