# %% [markdown]
# # A certified periodic orbit of rotation number one
#
# For a rational polygon the times are rational, so scaling R by an integer
# puts its lattice points on a periodic T^2 orbit.  ``find_orbit`` builds
# that candidate and replays the map on every point of it.

# %%
from pathlib import Path

from outer_billiards import find_orbit, necklace, validate_polygon, verify_orbit
from outer_billiards.cli import orbit_scene
from outer_billiards.documents import dump_certificate, load_certificate
from outer_billiards.geometry import sqrt_upper
from outer_billiards.svg import render_svg

P = validate_polygon([(0, 0), (4, 1), (3, 3), (-1, 3)], require_no_parallel_sides=True)
nd = necklace(P)
cert = find_orbit(P, nd)
print("p =", cert.spec.p, " T^2-period", cert.t2_period, " rotation", cert.rotation_number)

# %% [markdown]
# The same construction works arbitrarily far out.

# %%
far = find_orbit(P, nd, min_scale=1000 * sqrt_upper(P.diameter_sq()))
print("far orbit: p =", far.spec.p, " closest squared distance", float(far.min_distance_sq))

# %% [markdown]
# Certificates are plain JSON and replay to the same bytes.

# %%
text = dump_certificate(cert, P)
doc = load_certificate(text)
again = verify_orbit(P, doc.cycle, nd)
print("replay identical:", dump_certificate(again, P) == text)

out = Path(__file__).with_name("out")
out.mkdir(exist_ok=True)
(out / "orbit.svg").write_text(render_svg(orbit_scene(P, nd, cert)))
