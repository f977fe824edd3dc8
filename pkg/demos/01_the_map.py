# %% [markdown]
# # The outer billiard map, step by step
#
# A point outside a convex polygon is reflected through the vertex where
# the polygon is seen "on the left".  Every coordinate stays an exact
# rational, so orbits can be compared with ``==``.

# %%
from fractions import Fraction

from outer_billiards import Point, iterate, step_T, step_T2, support_vertex, validate_polygon

P = validate_polygon([(0, 0), (2, 0), (1, 3), (0, 2)], require_no_parallel_sides=True)
x = Point(Fraction(9, 2), Fraction(-1, 3))

# %%
v = support_vertex(P, x)
print("reflect in vertex", v + 1, "=", P.vertices[v])
y, _ = step_T(P, x)
print("T(x) =", y)

# %% [markdown]
# Two reflections compose to a translation by twice the vector joining the
# two vertices.

# %%
z, (i, j) = step_T2(P, x)
print("T^2(x) - x =", z - x, "=", (P.vertices[j] - P.vertices[i]) * 2)

# %% [markdown]
# Points on the extension of a side are where the map is undefined.

# %%
traj = iterate(P, Point(-5, 0), 10)
print(traj.status, "at step", traj.failed_step)

traj = iterate(P, x, 200, use_T2=True)
print(traj.status, "period", traj.period)
