# %% [markdown]
# # Which scales work, and irrational times
#
# ``density_scan`` lists the scales k whose candidate orbit Q(k m) passes
# the strip test.  For irrational times one instead needs q with every
# q t_i close to an integer, which ``approx_search`` finds on a grid.

# %%
from outer_billiards import approx_search, density_scan, necklace, validate_polygon

P = validate_polygon([(0, 0), (3, 0), (4, 2), (1, 3)], require_no_parallel_sides=True)
nd = necklace(P)
rep = density_scan(P, nd, 20, simulate=True)
print("admissible k:", rep.admissible, " fraction", rep.fraction)

# %%
phi = (1 + 5 ** 0.5) / 2
for delta in (1e-1, 1e-2, 1e-3):
    q, p = approx_search([1.0, phi], delta, 10, precision=1e-15)
    print(f"delta {delta:g}: q = {q:.6f}, p = {p}")
