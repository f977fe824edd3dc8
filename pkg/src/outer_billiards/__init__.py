"""Exact outer billiards about rational convex polygons.

The main entry points::

    P = validate_polygon([(0, 0), (1, 0), (0, 1)], require_no_parallel_sides=True)
    nd = necklace(P)                 # translation vectors, strips, R, times
    cert = find_orbit(P, nd)         # certified periodic orbit of T^2
"""

__version__ = "0.1.0"

from .geometry import (COLLINEAR, LEFT, RIGHT, ConvexPolygon, DirectedLine, Empty,
                       HalfPlane, Point, Vector, halfplane_intersection, orientation,
                       reflect, validate_polygon, winding_number)
from .billiard import (StepOutcome, Trajectory, detect_period, iterate, step_T, step_T2,
                       support_vertex)
from .asymptotics import (NecklaceData, OppositePair, QuasiRational, Strip, far_field_radius,
                          necklace, necklace_polygon, opposite_pairs, quasi_rationality,
                          strips, times, translation_vectors)
from .orbits import (OrbitCertificate, OrbitSpec, StripCheck, approx_search, build_Q,
                     check_strips, find_orbit, verify_orbit)
from .analysis import (CyclicWord, DensityReport, PeriodicCell, RetraceReport, Stability,
                       density_scan, periodic_cell, perturb_and_retrace, stability_check,
                       word_composition)
