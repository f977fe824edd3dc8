# %% [markdown]
# # What T^2 looks like from far away
#
# Far from the table, T^2 is a translation by one of finitely many vectors
# +-v_j.  The directions where the vector changes are carried by strips
# around the polygon, and the orbits follow a centrally symmetric 2n-gon R.

# %%
import random
from fractions import Fraction
from pathlib import Path

from outer_billiards import Point, far_field_radius, necklace, step_T2, validate_polygon
from outer_billiards.cli import necklace_scene
from outer_billiards.svg import render_svg

P = validate_polygon([(-4, 0), (-1, -3), (4, -2), (-3, 3), (-4, 2)], require_no_parallel_sides=True)
nd = necklace(P)

for j, (v, pair) in enumerate(zip(nd.vectors, nd.pairs)):
    print(f"v_{j + 1} = {v}   vertices A{pair.upper + 1}, A{pair.lower + 1}")
print("times:", [int(t) for t in nd.times])

# %% [markdown]
# Check the translation law on a few random far points.

# %%
rho = far_field_radius(P, nd)
rng = random.Random(0)
allowed = set(nd.vectors) | {-v for v in nd.vectors}
for _ in range(5):
    x = Point(Fraction(rng.randint(-10 ** 6, 10 ** 6), 997), Fraction(rng.randint(-10 ** 6, 10 ** 6), 991))
    x = x * (2 * rho / 1000)
    if P.dist_sq(x) < rho * rho:
        continue
    y, _ = step_T2(P, x)
    print(y - x in allowed, y - x)

# %%
out = Path(__file__).with_name("out")
out.mkdir(exist_ok=True)
(out / "necklace.svg").write_text(render_svg(necklace_scene(P, nd)))
print("wrote", out / "necklace.svg")
