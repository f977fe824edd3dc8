from fractions import Fraction as F

import mpmath
import pytest
from hypothesis import given, settings, strategies as st

from outer_billiards import (OrbitSpec, Point, approx_search, build_Q, check_strips,
                             find_orbit, verify_orbit)
from outer_billiards.errors import NotAnOrbit, PrecisionInsufficient, SearchExhausted
from outer_billiards.geometry import winding_number
from outer_billiards.orbits import boundary_dist_sq

from conftest import CORPUS_NAMES, TRIANGLES, certificate, far_scale, load
from oracles import residuals_mp


@pytest.mark.parametrize("name", CORPUS_NAMES)
def test_build_Q_symmetric_and_closed(name):
    P, nd = load(name)
    p = tuple(int(t) * 2 for t in nd.times)
    Q, cycle = build_Q(nd, OrbitSpec(p, nd.origin))
    n = nd.n
    assert Q.n == 2 * n
    for j in range(n):
        assert Q[j] + Q[j + n] == nd.origin * 2
    assert sum(Q.sides(), Point(0, 0)) == Point(0, 0)
    assert len(cycle) == 2 * sum(p) == len(set(cycle))
    assert cycle[0] == Q[0]
    # cycle runs clockwise around O
    assert winding_number(cycle, nd.origin) == -1


@pytest.mark.parametrize("name", TRIANGLES)
@pytest.mark.parametrize("k", [1, 3, 17])
def test_triangle_Q_is_dilate_of_R(name, k):
    P, nd = load(name)
    Q, _ = build_Q(nd, OrbitSpec((k, k, k), nd.origin))
    O = nd.origin
    assert Q.vertices == tuple(O + (r - O) * k for r in nd.R.vertices)
    assert check_strips(Q, nd.strips)


@pytest.mark.parametrize("name", CORPUS_NAMES)
def test_unbalanced_p_fails_strip_check(name):
    P, nd = load(name)
    K = 1000 * max(int(t) for t in nd.times)
    p = (1, K) + (1,) * (nd.n - 2)
    Q, _ = build_Q(nd, OrbitSpec(p, nd.origin))
    res = check_strips(Q, nd.strips)
    assert not res
    corner = Q[res.corner]
    assert not nd.strips[res.strip].contains(corner, strict=True)


def test_orbit_spec_validation():
    with pytest.raises(ValueError):
        OrbitSpec((1, 0, 2), Point(0, 0))
    with pytest.raises(ValueError):
        OrbitSpec((1, F(1, 2), 2), Point(0, 0))


@pytest.mark.parametrize("name", CORPUS_NAMES)
def test_find_orbit_certificate(name):
    P, nd = load(name)
    cert = certificate(name)
    assert cert.rotation_number == 1
    assert cert.t2_period == 2 * sum(cert.spec.p) == len(cert.cycle)
    assert cert.t_period == 2 * cert.t2_period == len(cert.word)
    Q, cycle = build_Q(nd, cert.spec)
    assert check_strips(Q, nd.strips)
    assert tuple(cycle) == cert.cycle
    assert verify_orbit(P, cert.cycle, nd) == cert
    if name in TRIANGLES:
        assert len(set(cert.spec.p)) == 1


@pytest.mark.parametrize("name", ["lattice_triangle", "pentagon", "kite_quad"])
def test_find_orbit_far(name):
    P, nd = load(name)
    cert = certificate(name, far=True)
    bound = far_scale(P)
    assert cert.min_distance_sq > bound * bound
    assert all(P.dist_sq(x) > bound * bound for x in cert.cycle)
    Q, _ = build_Q(nd, cert.spec)
    assert boundary_dist_sq(Q, P) > bound * bound
    assert cert.rotation_number == 1


def test_cap_too_small_exhausts():
    P, nd = load("pentagon")
    base = certificate("pentagon")
    # a scale that k = 1 cannot clear, so at least k = 2 is needed
    min_scale = F(1)
    while min_scale * min_scale < base.min_distance_sq:
        min_scale *= 2
    with pytest.raises(SearchExhausted) as info:
        find_orbit(P, nd, min_scale=min_scale, cap=1)
    assert info.value.diagnostics["cap"] == 1
    cert = find_orbit(P, nd, min_scale=min_scale, cap=100)
    assert cert.spec.p[0] >= 2 * base.spec.p[0]


def test_verify_rejects_moved_vertex():
    P, nd = load("hexagon")
    cert = certificate("hexagon")
    cycle = list(cert.cycle)
    cycle[5] = cycle[5] + Point(F(1, 3), 0)
    with pytest.raises(NotAnOrbit) as info:
        verify_orbit(P, cycle, nd)
    assert info.value.step in (4, 5)


def test_verify_rejects_non_minimal_cycle():
    P, nd = load("lattice_triangle")
    cert = certificate("lattice_triangle")
    with pytest.raises(NotAnOrbit):
        verify_orbit(P, cert.cycle * 2, nd)


def test_approx_search_examples():
    assert approx_search([1, 1], 0.1, 5) == (5.0, [5, 5])
    q, p = approx_search([1, 1.6180339887], 0.5, 10)
    assert q == 10
    phi = float((1 + mpmath.sqrt(5)) / 2)
    q, p = approx_search([1, phi], 1e-3, 10, precision=1e-12)
    t_mp = [mpmath.mpf(1), (1 + mpmath.sqrt(5)) / 2]
    assert all(r < 1e-3 for r in residuals_mp(q, t_mp, p))
    assert q >= 10


def test_approx_search_precision_guard():
    with pytest.raises(PrecisionInsufficient):
        approx_search([1, 2 ** 0.5], 1e-3, 10 ** 6, precision=1e-8)


@settings(max_examples=30, deadline=None)
# two times and delta >= 0.05 keep the expected search to ~10^5 grid points
@given(st.lists(st.floats(min_value=0.1, max_value=5), min_size=1, max_size=2),
       st.floats(min_value=0.05, max_value=0.3), st.floats(min_value=0, max_value=50))
def test_approx_search_residuals(t, delta, q_min):
    q, p = approx_search(t, delta, q_min, precision=1e-12)
    assert q >= q_min
    t_mp = [mpmath.mpf(x) for x in t]
    assert all(r < delta for r in residuals_mp(q, t_mp, p))
