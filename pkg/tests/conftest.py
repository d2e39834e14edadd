import numpy as np
import pytest
from hypothesis import strategies as st
from scipy.spatial import ConvexHull

from ricci_density.errors import DensityError
from ricci_density.polytope import builtin, validate_polygon


@pytest.fixture
def pentagon():
    return builtin("pentagon")


@pytest.fixture
def trapezium():
    return builtin("trapezium")


@pytest.fixture
def square():
    return builtin("square")


@pytest.fixture
def unit_triangle():
    return validate_polygon([(0, 0), (1, 0), (0, 1)])


def random_convex_polygon(rng, lo=-3.0, hi=3.0, max_vertices=8, min_area=0.05):
    """Hull of 3..max_vertices uniform points, retried until it is a valid polygon."""
    while True:
        k = int(rng.integers(3, max_vertices + 1))
        pts = rng.uniform(lo, hi, (k, 2))
        try:
            hull = ConvexHull(pts)
        except Exception:
            continue
        if hull.volume < min_area:
            continue
        try:
            return validate_polygon(pts[hull.vertices])
        except DensityError:
            continue


@st.composite
def convex_polygons(draw, lo=-3.0, hi=3.0, max_vertices=8):
    seed = draw(st.integers(0, 2 ** 32 - 1))
    return random_convex_polygon(np.random.default_rng(seed), lo, hi, max_vertices)


coefficients = st.floats(-2.0, 2.0, allow_nan=False)


def pytest_configure(config):
    config.addinivalue_line("markers", "acceptance(n): exit criterion number n")


def pytest_terminal_summary(terminalreporter):
    from test_acceptance import CRITERIA

    status = {}
    for key in ("passed", "failed", "error"):
        for rep in terminalreporter.stats.get(key, []):
            if getattr(rep, "when", "call") != "call" and key == "passed":
                continue
            n = dict(rep.user_properties).get("criterion")
            if n is None:
                continue
            ok = key == "passed"
            status[n] = status.get(n, True) and ok
    if not status:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(status):
        terminalreporter.write_line("[%s] criterion %d: %s"
                                    % ("PASS" if status[n] else "FAIL", n, CRITERIA[n]))


@pytest.fixture(autouse=True)
def _tag_criterion(request, record_property):
    marker = request.node.get_closest_marker("acceptance")
    if marker is not None:
        record_property("criterion", marker.args[0])
