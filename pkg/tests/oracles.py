"""Independent brute-force oracles used by the tests.

None of these reuse the library's fast paths: they work from the raw vertex
lists with plain Fraction arithmetic.
"""
import math
from fractions import Fraction


def _cross(ax, ay, bx, by):
    return ax * by - ay * bx


def brute_support_vertex(vertices, x):
    """Index w such that every other vertex lies strictly left of the line x -> A_w.

    Returns None when no vertex qualifies (x inside P, or x on the
    extension of a side).
    """
    found = []
    for w, A in enumerate(vertices):
        dx, dy = A[0] - x[0], A[1] - x[1]
        if dx == 0 and dy == 0:
            return None
        if all(_cross(dx, dy, B[0] - x[0], B[1] - x[1]) > 0
               for i, B in enumerate(vertices) if i != w):
            found.append(w)
    return found[0] if len(found) == 1 else None


def brute_T(vertices, x):
    w = brute_support_vertex(vertices, x)
    if w is None:
        return None
    A = vertices[w]
    return (2 * A[0] - x[0], 2 * A[1] - x[1])


def brute_vectors(vertices):
    """The set {+-2(A_max - A_min)} over sampled generic directions.

    For each open interval between consecutive side directions a direction u
    is sampled and the extreme vertices of <u, A> are found by scanning.
    """
    n = len(vertices)
    angles = set()
    for i in range(n):
        a, b = vertices[i], vertices[(i + 1) % n]
        angles.add(math.atan2(float(b[1] - a[1]), float(b[0] - a[0])) % math.pi)
    angles = sorted(angles)
    mids = [(angles[i] + angles[i + 1]) / 2 for i in range(len(angles) - 1)]
    mids.append((angles[-1] + angles[0] + math.pi) / 2)
    out = set()
    for t in mids:
        # normal to the sampled direction, as an exact rational vector
        nx = Fraction(-math.sin(t)).limit_denominator(10 ** 6)
        ny = Fraction(math.cos(t)).limit_denominator(10 ** 6)
        vals = [nx * A[0] + ny * A[1] for A in vertices]
        hi = vertices[vals.index(max(vals))]
        lo = vertices[vals.index(min(vals))]
        v = (2 * (hi[0] - lo[0]), 2 * (hi[1] - lo[1]))
        out.add(v)
        out.add((-v[0], -v[1]))
    return out


def inside_convex(vertices, z):
    """1 strictly inside a CCW convex polygon, 0 outside, None on the boundary."""
    n = len(vertices)
    signs = []
    for i in range(n):
        a, b = vertices[i], vertices[(i + 1) % n]
        signs.append(_cross(b[0] - a[0], b[1] - a[1], z[0] - a[0], z[1] - a[1]))
    if all(s > 0 for s in signs):
        return 1
    if any(s < 0 for s in signs):
        return 0
    return None


def residuals_mp(q, t_mp, p):
    """Residuals |q t_i - p_i| at 50 digits (mpmath)."""
    import mpmath
    with mpmath.workdps(50):
        return [abs(mpmath.mpf(q) * ti - pi) for ti, pi in zip(t_mp, p)]
