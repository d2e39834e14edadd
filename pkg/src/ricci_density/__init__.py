"""Perelman Gaussian density of Einstein metrics and toric Kahler-Ricci solitons."""

from .density import (CLBW_PROFILE, PAGE_PROFILE, CalabiProfile, DensityReport,
                      SolitonProblem, TopologyInvariants, calabi_cmin,
                      conformal_density, einstein_density, paper_table,
                      soliton_constant, soliton_density, soliton_S, soliton_Z)
from .expint import (LinearForm, NodeList, dd_exp, polytope_exp_integral,
                     polytope_moment1, polytope_moment2, quadrature_oracle,
                     simplex_exp_integral)
from .optimize import (MinimizationResult, RationalFn, minimize_convex_newton,
                       minimize_rational, minimize_scalar)
from .polytope import (Polytope, Simplex, area, builtin, centroid, triangulate,
                       validate_polygon)

__version__ = "0.1.0"
