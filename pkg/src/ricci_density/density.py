"""Gaussian density of Einstein metrics and of toric Kahler-Ricci solitons.

Three routes are provided:

* :func:`einstein_density` -- closed form from scalar curvature and volume,
* :func:`conformal_density` -- conformally Kahler Einstein metrics, from
  the Euler characteristic, signature and the extremal Calabi energy,
* :func:`soliton_density` -- toric shrinking solitons, from the moment
  polytope alone.

:func:`paper_table` runs all four reference metrics.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from . import polytope as poly
from .errors import (NonpositiveCurvature, NonpositiveDensity,
                     NonpositiveVolume, UnknownName)
from .expint import LinearForm, polytope_exp_integral, polytope_moments
from .optimize import (MinimizationResult, RationalFn, minimize_convex_newton,
                       minimize_rational)

DEFAULT_TOL = 1e-10


@dataclass(frozen=True)
class DensityReport:
    theta: float
    nu: float
    intermediates: dict = field(default_factory=dict)
    metric_label: str = ""

    def to_dict(self) -> dict:
        return {
            "metric_label": self.metric_label,
            "theta": self.theta,
            "nu": self.nu,
            "intermediates": dict(self.intermediates),
        }

    @classmethod
    def from_dict(cls, obj: dict) -> "DensityReport":
        return cls(theta=float(obj["theta"]), nu=float(obj["nu"]),
                   intermediates={k: float(v) for k, v in obj["intermediates"].items()},
                   metric_label=str(obj["metric_label"]))


def _report(nu: float, label: str, **intermediates) -> DensityReport:
    return DensityReport(math.exp(nu), nu,
                         {k: float(v) for k, v in intermediates.items()}, label)


# -- Einstein metrics ------------------------------------------------------

def einstein_density(scalar_curvature: float, volume: float, dim: float,
                     label: str = "Einstein") -> DensityReport:
    """``Theta = (R / (2 pi n e))^(n/2) Vol`` for a positive Einstein metric."""
    R, V, n = float(scalar_curvature), float(volume), float(dim)
    if not R > 0:
        raise NonpositiveCurvature("scalar curvature must be positive, got %r" % R)
    if not V > 0:
        raise NonpositiveVolume("volume must be positive, got %r" % V)
    if not n > 0:
        raise ValueError("dimension must be positive, got %r" % n)
    # log form keeps the scale invariance R -> R/lam, V -> lam^(n/2) V tight
    nu = 0.5 * n * (math.log(R) - math.log(2 * math.pi * n) - 1.0) + math.log(V)
    return _report(nu, label, scalar_curvature=R, volume=V, dimension=n)


# -- conformally Kahler Einstein metrics -------------------------------------

@dataclass(frozen=True)
class TopologyInvariants:
    euler_characteristic: int
    signature: int


CP2_BLOWUP_1 = TopologyInvariants(4, 0)  # CP^2 # (-CP^2)
CP2_BLOWUP_2 = TopologyInvariants(5, -1)  # CP^2 # 2(-CP^2)


@dataclass(frozen=True)
class CalabiProfile:
    """Extremal Calabi energy as ``prefactor * min over bracket of rational``.

    ``prefactor`` is stored as a multiple of pi**2.
    """

    rational: RationalFn
    prefactor: float
    bracket: tuple
    name: str = ""

    def __post_init__(self):
        if not self.prefactor > 0:
            raise ValueError("prefactor must be positive")


# Calabi energy profile of the Chen-LeBrun-Weber Kahler class
CLBW_PROFILE = CalabiProfile(
    RationalFn(3.0, [32, 176, 318, 280, 132, 32, 3], [12, 72, 138, 120, 54, 12, 1]),
    32.0, (0.0, 5.0), "clbw")

# Calabi energy profile for the Page metric; pole at x = 0
PAGE_PROFILE = CalabiProfile(
    RationalFn(1.0, [4, 14, 16, 3], [0, 6, 6, 1]),
    96.0, (0.1, 10.0), "page")

CALABI_PROFILES = {"clbw": CLBW_PROFILE, "page": PAGE_PROFILE}


def calabi_minimum(profile: CalabiProfile, tol: float = DEFAULT_TOL) -> MinimizationResult:
    return minimize_rational(profile.rational, profile.bracket, tol)


def calabi_cmin(profile: CalabiProfile, tol: float = DEFAULT_TOL) -> float:
    return profile.prefactor * math.pi ** 2 * calabi_minimum(profile, tol).value


def conformal_theta(topo: TopologyInvariants, c_min: float) -> float:
    chi, sigma = topo.euler_characteristic, topo.signature
    return (1.5 * (2 * chi + 3 * sigma) / math.e ** 2
            - 2.0 * c_min / (8 * math.pi * math.e) ** 2)


def conformal_density(topo: TopologyInvariants, c_min: float,
                      label: str = "conformally Kahler Einstein") -> DensityReport:
    if c_min < 0:
        raise ValueError("c_min must be non-negative, got %r" % c_min)
    theta = conformal_theta(topo, c_min)
    if not theta > 0:
        raise NonpositiveDensity("inputs give Theta = %.6g <= 0" % theta)
    return DensityReport(theta, math.log(theta), {
        "chi": float(topo.euler_characteristic),
        "sigma": float(topo.signature),
        "c_min": float(c_min),
    }, label)


def conformal_profile_density(topo: TopologyInvariants, profile: CalabiProfile,
                              label: str = "conformally Kahler Einstein",
                              tol: float = DEFAULT_TOL) -> DensityReport:
    res = calabi_minimum(profile, tol)
    c_min = profile.prefactor * math.pi ** 2 * res.value
    rep = conformal_density(topo, c_min, label)
    rep.intermediates.update(profile_argmin=res.x, profile_min=res.value)
    return rep


# -- toric solitons ----------------------------------------------------------

@dataclass(frozen=True)
class SolitonProblem:
    polytope: poly.Polytope
    complex_dimension: int = 2
    symmetry_reduce: bool = False
    name: str | None = None

    def __post_init__(self):
        if self.polytope.dimension != self.complex_dimension:
            raise ValueError("polytope dimension %d != complex dimension %d"
                             % (self.polytope.dimension, self.complex_dimension))

    @classmethod
    def builtin(cls, name: str, symmetry_reduce: bool = True) -> "SolitonProblem":
        return cls(poly.builtin(name), 2, symmetry_reduce, name)


def log_partition(p: poly.Polytope) -> Callable:
    """Value, gradient and Hessian of ``c -> int_p exp(-<c, x>) dx``."""

    def fun(c):
        i0, m1, m2 = polytope_moments(p, LinearForm(-np.asarray(c)))
        return i0, -m1, m2

    return fun


def soliton_constant(prob: SolitonProblem, tol: float = DEFAULT_TOL) -> LinearForm:
    """Linear soliton potential whose first moments all vanish.

    Minimizes the convex function ``c -> int_P exp(-<c, x>) dx``; with
    ``symmetry_reduce`` the search is restricted to ``c (1, ..., 1)``.
    """
    return _solve_soliton(prob, tol)[0]


def _solve_soliton(prob: SolitonProblem, tol: float):
    d = prob.polytope.dimension
    full = log_partition(prob.polytope)
    if prob.symmetry_reduce:
        ones = np.ones(d)

        def fun(c):
            v, g, H = full(c[0] * ones)
            return v, np.array([g.sum()]), np.array([[H.sum()]])

        res = minimize_convex_newton(fun, [0.0], tol)
        coeffs = res.argmin[0] * ones
    else:
        res = minimize_convex_newton(full, np.zeros(d), tol)
        coeffs = res.argmin
    return LinearForm(coeffs), res


def soliton_Z(prob: SolitonProblem, potential: LinearForm, beta: float = 1.0) -> float:
    """``(2 pi e)^-n int_M exp(-beta f) dV`` with the torus integrated out.

    The torus contributes ``(2 pi)^n``, leaving ``e^-n int_P exp(-beta f) dx``.
    """
    if not beta > 0:
        raise ValueError("beta must be positive")
    n = prob.complex_dimension
    return math.exp(-n) * polytope_exp_integral(prob.polytope, potential.scaled(-beta))


def soliton_S(prob: SolitonProblem, potential: LinearForm, beta: float = 1.0) -> float:
    """``(1 - beta d/dbeta) log Z`` from exact first moments."""
    if not beta > 0:
        raise ValueError("beta must be positive")
    i0, m1, _ = polytope_moments(prob.polytope, potential.scaled(-beta))
    mean_f = (potential.coefficients @ m1) / i0 + potential.offset
    return math.log(math.exp(-prob.complex_dimension) * i0) + beta * mean_f


# Closed forms displayed in the literature for the two reference polytopes.
def pentagon_closed_form(c: float) -> float:
    return (math.exp(2 * c) - 2 + (1 - c) * math.exp(-c)) / c ** 2


def trapezium_displayed_closed_form(c: float) -> float:
    """Formula as printed for the trapezium; does not match the integral."""
    return (math.exp(2 * c) - math.exp(-c) - 3 * c * math.exp(-c)) / c ** 2


def trapezium_closed_form(c: float) -> float:
    """``int_{-1}^{1} (s + 2) exp(-c s) ds``, the actual trapezium integral."""
    return (math.exp(c) * (c + 1) - math.exp(-c) * (3 * c + 1)) / c ** 2


@dataclass(frozen=True)
class ClosedFormDiagnostic:
    polytope: str
    c: float
    engine: float
    displayed: float
    derived: float | None
    tolerance: float = 1e-6

    @property
    def discrepancy(self) -> float:
        return abs(self.displayed - self.engine)

    @property
    def flagged(self) -> bool:
        return self.discrepancy > self.tolerance * max(1.0, abs(self.engine))

    def describe(self) -> str:
        lines = ["closed-form check (%s, c = %.6f):" % (self.polytope, self.c),
                 "  engine integral        %.10f" % self.engine,
                 "  displayed closed form  %.10f" % self.displayed]
        if self.derived is not None:
            lines.append("  derived closed form    %.10f" % self.derived)
        if self.flagged:
            lines.append("  MISMATCH: displayed closed form differs from the "
                         "integral by %.6g" % self.discrepancy)
        else:
            lines.append("  agreement to %.3g" % self.discrepancy)
        return "\n".join(lines)


_DISPLAYED = {
    "pentagon": (pentagon_closed_form, None),
    "trapezium": (trapezium_displayed_closed_form, trapezium_closed_form),
}


def closed_form_diagnostic(name: str, c: float) -> ClosedFormDiagnostic:
    """Compare the engine with the published closed form at ``c (x1 + x2)``."""
    if name not in _DISPLAYED:
        raise UnknownName("no published closed form for %r" % name)
    displayed, derived = _DISPLAYED[name]
    engine = polytope_exp_integral(poly.builtin(name), LinearForm([-c, -c]))
    return ClosedFormDiagnostic(name, c, engine, displayed(c),
                                None if derived is None else derived(c))


def soliton_density(prob: SolitonProblem, tol: float = DEFAULT_TOL,
                    label: str | None = None) -> DensityReport:
    potential, res = _solve_soliton(prob, tol)
    n = prob.complex_dimension
    integral = polytope_exp_integral(prob.polytope, -potential)
    z1 = math.exp(-n) * integral
    nu = soliton_S(prob, potential, 1.0)
    inter = {"soliton_constant_%d" % (k + 1): c
             for k, c in enumerate(potential.coefficients)}
    inter.update(min_integral=integral, Z1=z1, log_Z1=math.log(z1),
                 gradient_norm=res.gradient_norm,
                 newton_iterations=res.iterations)
    if prob.name in _DISPLAYED and prob.symmetry_reduce:
        diag = closed_form_diagnostic(prob.name, float(potential.coefficients[0]))
        inter.update(displayed_closed_form=diag.displayed,
                     closed_form_discrepancy=diag.discrepancy)
        if diag.derived is not None:
            inter["derived_closed_form"] = diag.derived
    return _report(nu, label or prob.name or "toric soliton", **inter)


# -- the reference table -----------------------------------------------------

@dataclass(frozen=True)
class TableRow:
    manifold: str
    metric_name: str
    metric_type: str
    report: DensityReport


def paper_table(tol: float = DEFAULT_TOL) -> list[TableRow]:
    """Koiso-Cao, Page, Chen-LeBrun-Weber and Wang-Zhu densities, in that order."""
    one, two = "CP2#-CP2", "CP2#2(-CP2)"
    return [
        TableRow(one, "Koiso-Cao Soliton", "Kahler-Ricci Soliton",
                 soliton_density(SolitonProblem.builtin("trapezium"), tol,
                                 "Koiso-Cao Soliton")),
        TableRow(one, "Page metric", "Einstein",
                 conformal_profile_density(CP2_BLOWUP_1, PAGE_PROFILE,
                                           "Page metric", tol)),
        TableRow(two, "Chen-LeBrun-Weber metric", "Einstein",
                 conformal_profile_density(CP2_BLOWUP_2, CLBW_PROFILE,
                                           "Chen-LeBrun-Weber metric", tol)),
        TableRow(two, "Wang-Zhu Soliton", "Kahler-Ricci Soliton",
                 soliton_density(SolitonProblem.builtin("pentagon"), tol,
                                 "Wang-Zhu Soliton")),
    ]
