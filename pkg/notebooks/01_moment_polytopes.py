"""
Moment polytopes
================

The two toric surfaces in this package are described by planar polygons:
a pentagon for the two-point blow-up of CP^2 and a trapezium for the
one-point blow-up. This script builds them, checks their basic geometry
and shows how vertex orientation is normalized.
"""

# %%
import numpy as np

from ricci_density.polytope import (area, builtin, centroid, triangulate,
                                    validate_polygon)
from ricci_density.errors import NonConvex

pentagon = builtin("pentagon")
trapezium = builtin("trapezium")
print(pentagon)
print(trapezium)

# %% [markdown]
# Areas come from the shoelace formula, and the fan triangulation from
# vertex 0 must reproduce them.

# %%
for name, p in [("pentagon", pentagon), ("trapezium", trapezium)]:
    tris = triangulate(p)
    print("%-10s area %.3f  triangles %d  sum %.3f  centroid %s"
          % (name, area(p), len(tris), sum(t.signed_volume for t in tris),
             np.round(centroid(p), 6)))

# %% [markdown]
# Clockwise input is reversed; a vertex list that is not a boundary cycle
# is rejected rather than silently re-sorted.

# %%
print(validate_polygon([(-1, 1), (0, 1), (1, 0), (1, -1), (-1, -1)]))
try:
    validate_polygon([(0, 0), (2, 0), (1, 1), (1, -1)])
except NonConvex as exc:
    print("rejected:", exc)

# %% [markdown]
# The pentagon's centroid is at (-2/21, -2/21): a constant potential does not
# balance the first moments, so the soliton needs a non-zero linear term.

# %%
print(centroid(pentagon), -2 / 21)
