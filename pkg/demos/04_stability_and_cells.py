# %% [markdown]
# # Why these orbits survive perturbation
#
# The vertices an orbit reflects in form a cyclic word.  When every letter
# shows up as often at odd as at even positions, the composed reflections
# are the identity for every nearby polygon too, so the orbit persists.

# %%
import random
from pathlib import Path

from outer_billiards import (detect_period, find_orbit, necklace, periodic_cell,
                             perturb_and_retrace, stability_check, validate_polygon,
                             word_composition)
from outer_billiards.analysis import CyclicWord, sample_interior
from outer_billiards.cli import cell_scene
from outer_billiards.geometry import sqrt_upper
from outer_billiards.svg import render_svg

P = validate_polygon([(-3, -1), (-2, -3), (2, -3), (2, 1), (0, 2), (-2, 1)],
                     require_no_parallel_sides=True)
nd = necklace(P)
cert = find_orbit(P, nd)
W = CyclicWord(cert.word)
print("word:", W)
print("stable:", bool(stability_check(W)), " composition:", word_composition(P, W).kind)

# %%
rep = perturb_and_retrace(P, sqrt_upper(P.diameter_sq()) / 10 ** 6, W, 10, seed=1,
                          near=cert.cycle[0])
print(f"{rep.successes}/10 perturbed polygons still carry the orbit")

# %% [markdown]
# Each periodic point sits in an open polygon of points with the same
# itinerary.

# %%
pc = periodic_cell(P, cert.cycle[0], cert.t2_period)
print("cell:", pc.cell)
samples = sample_interior(pc.cell, 50, random.Random(0))
print(sum(detect_period(P, y, cert.t2_period) == cert.t2_period for y in samples), "/ 50 periodic")

out = Path(__file__).with_name("out")
out.mkdir(exist_ok=True)
(out / "cell.svg").write_text(render_svg(cell_scene(P, pc)))
