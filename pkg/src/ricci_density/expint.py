"""Exact integrals of exponentials of linear forms over polytopes.

The workhorse is the Hermite-Genocchi identity

    integral over simplex D of exp(l(x)) dx = d! vol(D) exp[l(v_0), ..., l(v_d)],

where ``exp[...]`` is the divided difference of the exponential. Moments
of ``x_i`` and ``x_i x_j`` follow by differentiating the divided difference
in its nodes, which only repeats nodes (confluent divided differences).

:func:`quadrature_oracle` is an independent check built on plain
pointwise evaluation of the integrand with a symmetric triangle rule.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import permutations
from typing import Sequence

import numpy as np

from .errors import NoConvergence
from .polytope import Polytope, Simplex, triangulate

# Node spread below which the divided difference is summed as a series
# about the mean node instead of through the difference recursion.
SERIES_SPREAD = 1.0


@dataclass(frozen=True, eq=False)
class LinearForm:
    """Affine function ``x -> <coefficients, x> + offset``."""

    coefficients: np.ndarray
    offset: float = 0.0

    def __post_init__(self):
        c = np.array(self.coefficients, dtype=float).reshape(-1)
        if not np.all(np.isfinite(c)) or not math.isfinite(self.offset):
            raise ValueError("linear form entries must be finite")
        c.setflags(write=False)
        object.__setattr__(self, "coefficients", c)
        object.__setattr__(self, "offset", float(self.offset))

    @classmethod
    def zero(cls, dim: int = 2) -> "LinearForm":
        return cls(np.zeros(dim))

    @property
    def dimension(self) -> int:
        return self.coefficients.size

    def __call__(self, x):
        return np.asarray(x, dtype=float) @ self.coefficients + self.offset

    def __neg__(self) -> "LinearForm":
        return LinearForm(-self.coefficients, -self.offset)

    def scaled(self, factor: float) -> "LinearForm":
        return LinearForm(factor * self.coefficients, factor * self.offset)

    def __repr__(self):
        coef = ", ".join("%.12g" % c for c in self.coefficients)
        return "LinearForm([%s], offset=%.12g)" % (coef, self.offset)


@dataclass(frozen=True)
class NodeList:
    """Divided-difference arguments; node ``values[k]`` is repeated ``multiplicities[k]`` times."""

    values: tuple
    multiplicities: tuple = field(default=None)

    def __post_init__(self):
        vals = tuple(float(v) for v in self.values)
        mult = self.multiplicities
        mult = (1,) * len(vals) if mult is None else tuple(int(m) for m in mult)
        if len(mult) != len(vals):
            raise ValueError("values and multiplicities differ in length")
        if any(m < 1 for m in mult):
            raise ValueError("multiplicities must be positive")
        if not vals:
            raise ValueError("at least one node is required")
        object.__setattr__(self, "values", vals)
        object.__setattr__(self, "multiplicities", mult)

    def arguments(self) -> np.ndarray:
        return np.repeat(np.array(self.values), self.multiplicities)


def _dd_series(z: np.ndarray) -> float:
    """exp[z_0..z_m] = sum_j h_j(z) / (j+m)!, with h_j complete homogeneous."""
    m = z.size - 1
    r = float(np.max(np.abs(z)))
    h = np.ones(m + 1)  # h_j of each prefix z_0..z_k
    coef = 1.0 / math.factorial(m)
    total = coef
    bound = coef  # r^j / (j! m!) >= |h_j| / (j+m)!
    j = 0
    while bound > 1e-18 * abs(total) or j <= r:
        j += 1
        acc = 0.0
        for k in range(m + 1):
            acc += z[k] * h[k]
            h[k] = acc
        coef /= j + m
        total += coef * h[m]
        bound *= r / j
    return total


def _dd_sorted(t: np.ndarray) -> float:
    n = t.size

    @lru_cache(maxsize=None)
    def rec(i, j):
        # divided difference over the contiguous sorted slice t[i:j]
        if j - i == 1:
            return math.exp(t[i])
        spread = t[j - 1] - t[i]
        if spread <= SERIES_SPREAD:
            mu = float(np.mean(t[i:j]))
            return math.exp(mu) * _dd_series(t[i:j] - mu)
        return (rec(i + 1, j) - rec(i, j - 1)) / spread

    return rec(0, n)


def dd_exp(nodes) -> float:
    """Confluent divided difference of ``exp`` at the given nodes.

    ``nodes`` is a :class:`NodeList` or a plain sequence of arguments
    (repeated values are treated as confluent).
    """
    if isinstance(nodes, NodeList):
        t = nodes.arguments()
    else:
        t = np.array(nodes, dtype=float).reshape(-1)
        if t.size == 0:
            raise ValueError("at least one node is required")
    return _dd_sorted(np.sort(t))


def _simplex_data(s: Simplex, form: LinearForm):
    d = s.dimension
    weight = math.factorial(d) * abs(s.signed_volume) * math.exp(form.offset)
    t = s.vertices @ form.coefficients
    return weight, t


def simplex_exp_integral(s: Simplex, form: LinearForm) -> float:
    weight, t = _simplex_data(s, form)
    return weight * dd_exp(t)


def simplex_moments(s: Simplex, form: LinearForm):
    """Zeroth, first and second moments of ``exp(form)`` over a simplex.

    Returns ``(I, m1, m2)`` with ``m1[i] = int x_i e^form`` and
    ``m2[i, j] = int x_i x_j e^form``.
    """
    weight, t = _simplex_data(s, form)
    v = s.vertices
    k = t.size
    i0 = dd_exp(t)
    # b1[a] = int over standard simplex of s_a e^<s,t>, b2 the second analogue
    b1 = np.array([dd_exp(np.append(t, t[a])) for a in range(k)])
    b2 = np.empty((k, k))
    for a in range(k):
        for b in range(a, k):
            val = dd_exp(np.append(t, [t[a], t[b]]))
            if a == b:
                val *= 2.0
            b2[a, b] = b2[b, a] = val
    return weight * i0, weight * (v.T @ b1), weight * (v.T @ b2 @ v)


def polytope_moments(p: Polytope, form: LinearForm):
    """Sum of :func:`simplex_moments` over the fan triangulation."""
    d = p.dimension
    i0, m1, m2 = 0.0, np.zeros(d), np.zeros((d, d))
    for s in triangulate(p):
        a, b, c = simplex_moments(s, form)
        i0 += a
        m1 += b
        m2 += c
    return i0, m1, m2


def polytope_exp_integral(p: Polytope, form: LinearForm) -> float:
    return math.fsum(simplex_exp_integral(s, form) for s in triangulate(p))


def polytope_moment1(p: Polytope, form: LinearForm, i: int) -> float:
    """``int_p x_i exp(form) dx`` with 0-based coordinate index ``i``."""
    if not 0 <= i < p.dimension:
        raise IndexError("coordinate index %d out of range" % i)
    return float(polytope_moments(p, form)[1][i])


def polytope_moment2(p: Polytope, form: LinearForm, i: int, j: int) -> float:
    """``int_p x_i x_j exp(form) dx`` with 0-based coordinate indices."""
    if not (0 <= i < p.dimension and 0 <= j < p.dimension):
        raise IndexError("coordinate index out of range")
    return float(polytope_moments(p, form)[2][i, j])


# -- quadrature oracle -----------------------------------------------------

@lru_cache(maxsize=None)
def symmetric_triangle_rule(order: int = 10):
    """Fully symmetric rule on the triangle, in barycentric coordinates.

    A collapsed (Duffy) Gauss-Legendre product rule with ``order`` points
    per direction, averaged over the six vertex permutations. Exact for
    polynomials of total degree ``2*order - 2``. Weights sum to one.
    """
    u, w = np.polynomial.legendre.leggauss(order)
    u = 0.5 * (u + 1.0)
    w = 0.5 * w
    a, b = np.meshgrid(u, u, indexing="ij")
    wa, wb = np.meshgrid(w, w, indexing="ij")
    x = a.ravel()
    y = (b * (1.0 - a)).ravel()
    wt = (wa * wb * (1.0 - a)).ravel() * 2.0
    bary = np.stack([1.0 - x - y, x, y], axis=1)
    pts = np.concatenate([bary[:, list(perm)] for perm in permutations(range(3))])
    wts = np.tile(wt, 6) / 6.0
    pts.setflags(write=False)
    wts.setflags(write=False)
    return pts, wts


def _refined_points(tri: np.ndarray, k: int, rule):
    """Quadrature nodes and weights for ``tri`` split uniformly into k*k pieces."""
    bary, w = rule
    subs = []
    for i in range(k):
        for j in range(k - i):
            subs.append([(i, j), (i + 1, j), (i, j + 1)])
            if i + j < k - 1:
                subs.append([(i + 1, j), (i + 1, j + 1), (i, j + 1)])
    ij = np.array(subs, dtype=float) / k  # (nsub, 3, 2) in the (e1, e2) frame
    o, e1, e2 = tri[0], tri[1] - tri[0], tri[2] - tri[0]
    corners = o + ij[..., :1] * e1 + ij[..., 1:] * e2  # (nsub, 3, 2)
    pts = np.einsum("qa,sad->sqd", bary, corners).reshape(-1, 2)
    area = 0.5 * abs(e1[0] * e2[1] - e1[1] * e2[0]) / (k * k)
    wts = np.tile(w * area, len(subs))
    return pts, wts


def _monomial(x: np.ndarray, alpha) -> np.ndarray:
    out = np.ones(len(x))
    for i, a in enumerate(alpha):
        if a:
            out = out * x[:, i] ** a
    return out


def _normalize_monomial(monomial, dim):
    if monomial is None:
        return (0,) * dim
    alpha = tuple(int(a) for a in monomial) + (0,) * (dim - len(monomial))
    if len(alpha) != dim or any(a < 0 for a in alpha) or sum(alpha) > 2:
        raise ValueError("monomial must be an exponent tuple of degree <= 2")
    return alpha


def quadrature_oracle(p: Polytope, form: LinearForm, monomial=None,
                      tol: float = 1e-10, max_level: int = 6,
                      order: int = 10) -> float:
    """Approximate ``int_p x^monomial exp(form) dx`` by uniform refinement.

    ``monomial`` is an exponent tuple such as ``(1, 0)`` for ``x_1`` or
    ``(1, 1)`` for ``x_1 x_2``; ``None`` means the constant 1. Each fan
    triangle is split into ``k*k`` congruent pieces for k = 1, 2, 4, ...
    until two successive values differ by at most ``tol`` times the
    integral of ``|x^monomial| exp(form)``. Raises :class:`NoConvergence`
    once ``k`` would exceed ``2**max_level``.
    """
    return quadrature_oracle_many(p, form, [monomial], tol, max_level, order)[0]


def quadrature_oracle_many(p: Polytope, form: LinearForm, monomials,
                           tol: float = 1e-10, max_level: int = 6,
                           order: int = 10, return_scales: bool = False):
    """:func:`quadrature_oracle` for several monomials sharing the sample points.

    With ``return_scales`` also returns the integrals of ``|x^monomial| exp(form)``
    that the tolerance is measured against.
    """
    if tol <= 0:
        raise ValueError("tol must be positive")
    alphas = [_normalize_monomial(m, p.dimension) for m in monomials]
    rule = symmetric_triangle_rule(order)
    tris = [s.vertices for s in triangulate(p)]
    prev = None
    for level in range(max_level + 1):
        k = 2 ** level
        pts, wts = zip(*(_refined_points(t, k, rule) for t in tris))
        x = np.concatenate(pts)
        w = np.concatenate(wts) * np.exp(form(x))
        vals, scales = [], []
        for alpha in alphas:
            mono = _monomial(x, alpha)
            vals.append(math.fsum(w * mono))
            scales.append(math.fsum(w * np.abs(mono)))
        if prev is not None and all(abs(v - q) <= tol * s
                                    for v, q, s in zip(vals, prev, scales)):
            return (vals, scales) if return_scales else vals
        prev = vals
    raise NoConvergence("quadrature did not reach tol=%g with %d subdivisions"
                        % (tol, 2 ** max_level))
