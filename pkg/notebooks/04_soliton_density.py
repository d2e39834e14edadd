"""
Density of toric Kahler-Ricci solitons
======================================

For a toric soliton the potential is linear in moment coordinates. Its
coefficients are found by minimizing c -> integral of exp(-<c, x>) over
the polygon, which forces every first moment to vanish. The density is
then e^-2 times the minimum.
"""

# %%
import math

import numpy as np

from ricci_density.density import (SolitonProblem, closed_form_diagnostic,
                                   soliton_constant, soliton_density,
                                   soliton_S, soliton_Z)
from ricci_density.expint import polytope_moments
from ricci_density.polytope import validate_polygon

for name in ("pentagon", "trapezium"):
    rep = soliton_density(SolitonProblem.builtin(name))
    print("%-10s c = %.8f  min = %.8f  Theta = %.6f"
          % (name, rep.intermediates["soliton_constant_1"],
             rep.intermediates["min_integral"], rep.theta))

# %% [markdown]
# Without the x1 <-> x2 reduction Newton's method still lands on the
# diagonal.

# %%
full = soliton_constant(SolitonProblem.builtin("pentagon", symmetry_reduce=False))
print(full)

# %% [markdown]
# At the soliton constant, S(1) = log Z(1): beta = 1 is stationary for log Z.

# %%
prob = SolitonProblem.builtin("trapezium")
f = soliton_constant(prob)
for beta in (0.8, 1.0, 1.2):
    print(beta, math.log(soliton_Z(prob, f, beta)), soliton_S(prob, f, beta))

# %% [markdown]
# The closed form printed for the trapezium does not agree with the
# integral (its c -> 0 limit is 4.5 instead of the area 4).

# %%
print(closed_form_diagnostic("trapezium", f.coefficients[0]).describe())

# %% [markdown]
# Any convex polygon works; here an asymmetric quadrilateral.

# %%
quad = validate_polygon([(-1, -1), (2, -1), (1, 1), (-1, 0.5)])
prob = SolitonProblem(quad)
f = soliton_constant(prob)
print(f, polytope_moments(quad, -f)[1], soliton_density(prob).theta)
