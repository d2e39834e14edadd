import math

import numpy as np
import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from ricci_density.density import (CLBW_PROFILE, CP2_BLOWUP_1, CP2_BLOWUP_2,
                                   PAGE_PROFILE, CalabiProfile, DensityReport,
                                   SolitonProblem, TopologyInvariants,
                                   calabi_cmin, closed_form_diagnostic,
                                   conformal_density, conformal_theta,
                                   einstein_density, paper_table,
                                   soliton_constant, soliton_density, soliton_S,
                                   soliton_Z)
from ricci_density.errors import (NonpositiveCurvature, NonpositiveDensity,
                                  NonpositiveVolume, UnknownName)
from ricci_density.expint import LinearForm, polytope_exp_integral, polytope_moments
from ricci_density.optimize import RationalFn
from ricci_density.polytope import area, builtin

E2 = math.e ** 2


# -- Einstein ------------------------------------------------------------------

def test_einstein_calibrated_to_one():
    n, vol = 4.0, 7.3
    R = 2 * math.pi * n * math.e * vol ** (-2 / n)
    rep = einstein_density(R, vol, n)
    assert rep.theta == pytest.approx(1.0, rel=1e-14)
    assert rep.nu == pytest.approx(0.0, abs=1e-14)


def test_round_s4():
    R, n = sympy.Integer(12), sympy.Integer(4)
    V = 8 * sympy.pi ** 2 / 3
    exact = sympy.simplify((R / (2 * sympy.pi * n * sympy.E)) ** (n / 2) * V)
    assert exact == 6 / sympy.E ** 2
    rep = einstein_density(12, 8 * math.pi ** 2 / 3, 4)
    assert rep.theta == pytest.approx(6 / E2, rel=1e-14)
    assert round(rep.theta, 5) == 0.81201


@settings(max_examples=50, deadline=None)
@given(st.floats(0.1, 100), st.floats(0.1, 100), st.sampled_from([2, 4, 6, 3.5]),
       st.floats(0.01, 100))
def test_einstein_scale_invariance(R, V, n, lam):
    a = einstein_density(R, V, n)
    b = einstein_density(R / lam, lam ** (n / 2) * V, n)
    assert b.theta == pytest.approx(a.theta, rel=1e-12)
    assert a.theta == pytest.approx(math.exp(a.nu), rel=1e-14)


def test_einstein_scale_invariance_example():
    a = einstein_density(12, 8 * math.pi ** 2 / 3, 4)
    b = einstein_density(12 / 3.7, 3.7 ** 2 * 8 * math.pi ** 2 / 3, 4)
    assert b.theta == pytest.approx(a.theta, rel=1e-14)


def test_einstein_errors():
    with pytest.raises(NonpositiveCurvature):
        einstein_density(0, 1, 4)
    with pytest.raises(NonpositiveVolume):
        einstein_density(1, -1, 4)


# -- conformally Kahler Einstein ------------------------------------------------------

def test_conformal_examples():
    clbw = conformal_density(CP2_BLOWUP_2, 32 * math.pi ** 2 * 7.13647)
    assert clbw.theta == pytest.approx(0.4552, abs=1e-4)
    page = conformal_density(CP2_BLOWUP_1, 96 * math.pi ** 2 * 2.72621)
    assert page.theta == pytest.approx(0.5172, abs=1e-4)
    bare = conformal_density(TopologyInvariants(3, 1), 0.0)
    assert bare.theta == pytest.approx(3 * (2 * 3 + 3) / (2 * E2), rel=1e-15)


def test_conformal_is_affine_in_cmin():
    topo = CP2_BLOWUP_2
    a, b = 1000.0, 2000.0
    ta, tb = conformal_theta(topo, a), conformal_theta(topo, b)
    slope = -2 / (8 * math.pi * math.e) ** 2
    assert (tb - ta) / (b - a) == pytest.approx(slope, rel=1e-12)
    mid = conformal_theta(topo, 1500.0)
    assert mid == pytest.approx(0.5 * (ta + tb), rel=1e-12)


def test_conformal_nonpositive():
    with pytest.raises(NonpositiveDensity):
        conformal_density(CP2_BLOWUP_2, 1e6)
    with pytest.raises(ValueError):
        conformal_density(CP2_BLOWUP_2, -1.0)


def test_calabi_cmin():
    assert calabi_cmin(CLBW_PROFILE) == pytest.approx(32 * math.pi ** 2 * 7.13647, abs=32 * math.pi ** 2 * 1e-5)
    assert calabi_cmin(PAGE_PROFILE) == pytest.approx(96 * math.pi ** 2 * 2.72621, abs=96 * math.pi ** 2 * 1e-5)
    one = CalabiProfile(RationalFn.constant(1.0), 32.0, (-1.0, 1.0))
    assert calabi_cmin(one) == pytest.approx(32 * math.pi ** 2, rel=1e-15)
    with pytest.raises(ValueError):
        CalabiProfile(RationalFn.constant(1.0), 0.0, (0, 1))


# -- toric solitons -------------------------------------------------------------------

def test_soliton_constants():
    p = soliton_constant(SolitonProblem.builtin("pentagon"))
    assert p.coefficients == pytest.approx([-0.434748] * 2, abs=1e-5)
    t = soliton_constant(SolitonProblem.builtin("trapezium"))
    assert t.coefficients == pytest.approx([0.5276] * 2, abs=1e-4)
    s = soliton_constant(SolitonProblem.builtin("square", symmetry_reduce=False), 1e-10)
    assert np.allclose(s.coefficients, 0.0, atol=1e-10)


@pytest.mark.parametrize("name", ["pentagon", "trapezium", "square"])
@pytest.mark.parametrize("reduce", [True, False])
def test_moment_constraint_at_soliton(name, reduce):
    prob = SolitonProblem.builtin(name, symmetry_reduce=reduce)
    f = soliton_constant(prob, 1e-10)
    _, m1, _ = polytope_moments(prob.polytope, -f)
    assert np.all(np.abs(m1) <= 1e-9)


def test_soliton_Z():
    pent = SolitonProblem.builtin("pentagon")
    f = LinearForm([-0.434748, -0.434748])
    assert soliton_Z(pent, f, 1.0) == pytest.approx(3.36094 / E2, rel=1e-5)
    for name in ("pentagon", "trapezium", "square"):
        prob = SolitonProblem.builtin(name)
        assert soliton_Z(prob, LinearForm.zero(), 1.0) == pytest.approx(
            area(prob.polytope) / E2, rel=1e-14)
    trap = SolitonProblem.builtin("trapezium")
    assert soliton_Z(trap, LinearForm([0.5276, 0.5276]), 1.0) == pytest.approx(
        3.8266 / E2, abs=1e-4)
    with pytest.raises(ValueError):
        soliton_Z(trap, LinearForm.zero(), 0.0)


def test_soliton_S():
    pent = SolitonProblem.builtin("pentagon")
    f = soliton_constant(pent)
    logz = math.log(soliton_Z(pent, f, 1.0))
    assert soliton_S(pent, f, 1.0) - logz == pytest.approx(0.0, abs=1e-12)
    assert soliton_S(pent, f, 1.0) == pytest.approx(math.log(3.36094) - 2, abs=1e-5)
    zero = LinearForm.zero()
    for beta in (0.3, 1.0, 2.5):
        assert soliton_S(pent, zero, beta) == pytest.approx(math.log(3.5) - 2, rel=1e-14)


@pytest.mark.parametrize("beta", [0.5, 1.0, 1.7])
def test_soliton_S_matches_numerical_derivative(beta):
    # independent route: (1 - beta d/dbeta) log Z by central differences
    prob = SolitonProblem.builtin("trapezium")
    f = LinearForm([0.9, -0.3], offset=0.2)
    logz = lambda b: math.log(soliton_Z(prob, f, b))
    h = 1e-5
    fd = logz(beta) - beta * (logz(beta + h) - logz(beta - h)) / (2 * h)
    assert soliton_S(prob, f, beta) == pytest.approx(fd, abs=1e-8)


@pytest.mark.parametrize("name", ["pentagon", "trapezium"])
def test_stationarity_in_beta(name):
    prob = SolitonProblem.builtin(name)
    f = soliton_constant(prob)
    h = 1e-4
    d = (math.log(soliton_Z(prob, f, 1 + h)) - math.log(soliton_Z(prob, f, 1 - h))) / (2 * h)
    assert abs(d) <= 1e-8


def test_soliton_density_examples():
    pent = soliton_density(SolitonProblem.builtin("pentagon"))
    assert pent.theta == pytest.approx(0.4549, abs=1e-4)
    trap = soliton_density(SolitonProblem.builtin("trapezium"))
    assert trap.theta == pytest.approx(0.5179, abs=1e-4)
    sq = soliton_density(SolitonProblem.builtin("square"))
    assert sq.theta == pytest.approx(4 / E2, rel=1e-14)


@pytest.mark.parametrize("name", ["pentagon", "trapezium"])
def test_routes_agree(name):
    prob = SolitonProblem.builtin(name)
    rep = soliton_density(prob)
    f = soliton_constant(prob)
    assert rep.theta == pytest.approx(polytope_exp_integral(prob.polytope, -f) / E2, rel=1e-12)
    assert rep.theta == pytest.approx(math.exp(rep.nu), rel=1e-14)
    assert 0 < rep.theta <= 1


def test_symmetry_without_reduction():
    for name in ("pentagon", "trapezium"):
        prob = SolitonProblem.builtin(name, symmetry_reduce=False)
        c = soliton_constant(prob, 1e-10).coefficients
        assert abs(c[0] - c[1]) <= 1e-9
        reduced = soliton_density(SolitonProblem.builtin(name))
        assert soliton_density(prob).theta == pytest.approx(reduced.theta, rel=1e-12)


def test_custom_polytope_soliton():
    # an asymmetric polygon still has vanishing moments at its soliton constant
    from ricci_density.polytope import validate_polygon
    p = validate_polygon([(-1, -1), (2, -1), (1, 1), (-1, 0.5)])
    prob = SolitonProblem(p)
    f = soliton_constant(prob)
    _, m1, _ = polytope_moments(p, -f)
    assert np.all(np.abs(m1) <= 1e-9)
    assert soliton_S(prob, f) == pytest.approx(math.log(soliton_Z(prob, f)), abs=1e-12)


def test_dimension_mismatch():
    with pytest.raises(ValueError):
        SolitonProblem(builtin("square"), complex_dimension=3)


def test_closed_form_diagnostic():
    d = closed_form_diagnostic("pentagon", -0.434748)
    assert not d.flagged
    d = closed_form_diagnostic("trapezium", 0.5276)
    assert d.flagged
    assert d.engine == pytest.approx(3.8266, abs=1e-4)
    assert d.derived == pytest.approx(d.engine, rel=1e-12)
    assert d.discrepancy > 0.5
    assert "MISMATCH" in d.describe()
    # the printed trapezium formula tends to 4.5, not the area 4, at c -> 0
    assert closed_form_diagnostic("trapezium", 1e-4).displayed == pytest.approx(4.5, abs=1e-3)
    with pytest.raises(UnknownName):
        closed_form_diagnostic("square", 0.1)


# -- table -------------------------------------------------------------------------------

def test_paper_table():
    rows = paper_table()
    assert [r.metric_name for r in rows] == [
        "Koiso-Cao Soliton", "Page metric", "Chen-LeBrun-Weber metric", "Wang-Zhu Soliton"]
    thetas = [r.report.theta for r in rows]
    assert thetas == pytest.approx([0.5179, 0.5172, 0.4552, 0.4549], abs=5e-5)
    assert thetas[0] > thetas[1]
    assert thetas[2] > thetas[3]


def test_report_dict_round_trip():
    rep = soliton_density(SolitonProblem.builtin("pentagon"))
    again = DensityReport.from_dict(rep.to_dict())
    assert again == rep
