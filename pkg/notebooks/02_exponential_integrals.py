"""
Exact exponential integrals
===========================

Integrals of exp(<l, x>) over a triangle are divided differences of the
exponential at the values of l at the vertices. This script compares the
exact engine with a brute-force quadrature and with the closed form known
for the pentagon.
"""

# %%
import math

import numpy as np

from ricci_density.expint import (LinearForm, dd_exp, polytope_exp_integral,
                                  polytope_moments, quadrature_oracle)
from ricci_density.density import pentagon_closed_form, trapezium_closed_form
from ricci_density.polytope import builtin

pentagon, trapezium = builtin("pentagon"), builtin("trapezium")

# %% [markdown]
# Divided differences stay accurate as nodes merge.

# %%
for eps in [1e-1, 1e-4, 1e-8, 0.0]:
    print("exp[0, %g, %g] = %.16f" % (eps, 2 * eps, dd_exp([0.0, eps, 2 * eps])))

# %% [markdown]
# F(c) = integral over the pentagon of exp(-c (x1 + x2)).

# %%
print("%6s %20s %20s %20s" % ("c", "engine", "closed form", "quadrature"))
for c in [-2.0, -0.434748, 0.5, 2.0]:
    f = LinearForm([-c, -c])
    print("%6.3f %20.15f %20.15f %20.15f" % (
        c, polytope_exp_integral(pentagon, f), pentagon_closed_form(c),
        quadrature_oracle(pentagon, f, tol=1e-12)))
print("c = 0: engine", polytope_exp_integral(pentagon, LinearForm([0, 0])), "(area 3.5)")

# %% [markdown]
# The same for the trapezium, with the slice formula
# integral_{-1}^{1} (s + 2) exp(-c s) ds.

# %%
for c in [-1.0, 0.5276, 1.5]:
    f = LinearForm([-c, -c])
    print("%7.4f %.15f %.15f" % (c, polytope_exp_integral(trapezium, f),
                                  trapezium_closed_form(c)))

# %% [markdown]
# First moments and the second-moment matrix come from the same machinery.

# %%
i0, m1, m2 = polytope_moments(pentagon, LinearForm([0.434748, 0.434748]))
print("I =", i0)
print("first moments =", m1)
print("second moments =\n", m2)
