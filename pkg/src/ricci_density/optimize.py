"""Scalar and convex minimizers used by the density pipelines."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np

from .errors import (BadBracket, NoConvergence, PoleError, PoleInBracket,
                     SingularHessian)

INVPHI = (math.sqrt(5.0) - 1.0) / 2.0
POLE_TOL = 1e-12


@dataclass(frozen=True)
class MinimizationResult:
    argmin: np.ndarray
    value: float
    gradient_norm: float
    iterations: int
    converged: bool

    @property
    def x(self) -> float:
        """Scalar argmin (first coordinate)."""
        return float(self.argmin[0])


def _horner(coeffs: np.ndarray, x: float) -> float:
    acc = 0.0
    for c in coeffs[::-1]:
        acc = acc * x + c
    return acc


@dataclass(frozen=True, eq=False)
class RationalFn:
    """``scale * N(x) / D(x)`` with coefficients in ascending powers of x."""

    scale: float
    numerator_coeffs: np.ndarray
    denominator_coeffs: np.ndarray

    def __post_init__(self):
        num = np.array(self.numerator_coeffs, dtype=float).reshape(-1)
        den = np.array(self.denominator_coeffs, dtype=float).reshape(-1)
        if not np.any(den):
            raise ValueError("denominator is identically zero")
        for a in (num, den):
            a.setflags(write=False)
        object.__setattr__(self, "numerator_coeffs", num)
        object.__setattr__(self, "denominator_coeffs", den)
        object.__setattr__(self, "scale", float(self.scale))

    @classmethod
    def constant(cls, value: float) -> "RationalFn":
        return cls(value, [1.0], [1.0])

    def denominator_real_roots(self) -> np.ndarray:
        den = np.trim_zeros(self.denominator_coeffs, "b")
        if den.size < 2:
            return np.empty(0)
        r = np.polynomial.polynomial.polyroots(den)
        return np.sort(r[np.abs(r.imag) <= 1e-9 * (1 + np.abs(r.real))].real)

    def __call__(self, x: float) -> float:
        x = float(x)
        roots = self.denominator_real_roots()
        if roots.size and np.min(np.abs(roots - x)) <= POLE_TOL:
            raise PoleError("x = %r is within %g of a pole" % (x, POLE_TOL))
        return self.scale * _horner(self.numerator_coeffs, x) / _horner(
            self.denominator_coeffs, x)


def _central_diffs(fn, x, h):
    fp, f0, fm = fn(x + h), fn(x), fn(x - h)
    return (fp - fm) / (2 * h), (fp - 2 * f0 + fm) / (h * h), f0


def minimize_scalar(fn: Callable[[float], float], bracket: Sequence[float],
                    tol: float = 1e-10, maxiter: int = 500) -> MinimizationResult:
    """Golden-section search on ``bracket`` followed by a Newton polish.

    The polish uses central differences for f' and f'' and is only kept
    while it stays inside the bracket and shrinks the slope.
    Unimodality on the bracket is assumed; otherwise a local minimum is
    returned.
    """
    lo, hi = (float(b) for b in bracket)
    if not lo < hi:
        raise BadBracket("bracket must satisfy lo < hi, got (%r, %r)" % (lo, hi))
    flo, fhi = fn(lo), fn(hi)
    if not (math.isfinite(flo) and math.isfinite(fhi)):
        raise BadBracket("function is not finite at the bracket ends")

    a, b = lo, hi
    x1 = b - INVPHI * (b - a)
    x2 = a + INVPHI * (b - a)
    f1, f2 = fn(x1), fn(x2)
    it = 0
    while b - a > tol:
        if it >= maxiter:
            raise NoConvergence("golden section exceeded %d iterations" % maxiter)
        if not (math.isfinite(f1) and math.isfinite(f2)):
            raise BadBracket("non-finite function value inside the bracket")
        it += 1
        if f1 <= f2:
            b, x2, f2 = x2, x1, f1
            x1 = b - INVPHI * (b - a)
            f1 = fn(x1)
        else:
            a, x1, f1 = x1, x2, f2
            x2 = a + INVPHI * (b - a)
            f2 = fn(x2)
    x = 0.5 * (a + b)
    fx = fn(x)

    # Newton polish on the central-difference slope; steps are kept only
    # while they reduce |f'| (values are too flat to compare near the minimum)
    h = 1e-5 * (1.0 + abs(x))
    if lo + h < x < hi - h:
        d1, d2, fx = _central_diffs(fn, x, h)
        for _ in range(8):
            if d2 <= 0 or d1 == 0:
                break
            xn = x - d1 / d2
            if not lo + h < xn < hi - h:
                break
            n1, n2, fn_new = _central_diffs(fn, xn, h)
            if abs(n1) >= abs(d1):
                break
            it += 1
            x, fx, d1, d2 = xn, fn_new, n1, n2

    if lo + h < x < hi - h:
        gnorm = abs(_central_diffs(fn, x, h)[0])
    else:
        # boundary minimum: one-sided slope
        gnorm = abs(fn(min(x + h, hi)) - fn(max(x - h, lo))) / (min(x + h, hi) - max(x - h, lo))
    # an endpoint may beat the interior estimate for non-unimodal input
    for xe, fe in ((lo, flo), (hi, fhi)):
        if fe < fx:
            x, fx = xe, fe
    return MinimizationResult(np.array([x]), float(fx), float(gnorm), it, True)


def minimize_rational(r: RationalFn, bracket: Sequence[float],
                      tol: float = 1e-10) -> MinimizationResult:
    lo, hi = (float(b) for b in bracket)
    roots = r.denominator_real_roots()
    bad = roots[(roots >= lo - POLE_TOL) & (roots <= hi + POLE_TOL)]
    if bad.size:
        raise PoleInBracket("denominator vanishes at x = %.12g inside [%g, %g]"
                            % (bad[0], lo, hi))
    return minimize_scalar(r, (lo, hi), tol)


def minimize_convex_newton(fun: Callable, init: Sequence[float],
                           tol: float = 1e-10, maxiter: int = 100,
                           max_halvings: int = 40) -> MinimizationResult:
    """Damped Newton iteration for a smooth strictly convex function.

    ``fun(x)`` returns ``(value, gradient, hessian)``. Steps are halved
    until the value does not increase. Stops once the gradient norm is at
    most ``tol``.
    """
    x = np.array(init, dtype=float).reshape(-1)
    f, g, H = fun(x)
    g = np.atleast_1d(np.asarray(g, dtype=float))
    for it in range(maxiter + 1):
        gnorm = float(np.linalg.norm(g))
        if gnorm <= tol:
            return MinimizationResult(x, float(f), gnorm, it, True)
        if it == maxiter:
            break
        H = np.atleast_2d(np.asarray(H, dtype=float))
        if not np.all(np.isfinite(H)) or np.linalg.cond(H) > 1e14:
            raise SingularHessian("Hessian is singular or ill-conditioned at %s" % x)
        step = np.linalg.solve(H, -g)
        t = 1.0
        for _ in range(max_halvings + 1):
            xn = x + t * step
            fn_, gn, Hn = fun(xn)
            if math.isfinite(fn_) and fn_ <= f:
                break
            # at the optimum value changes drown in rounding; accept progress in g
            if (math.isfinite(fn_) and fn_ <= f + 8 * np.finfo(float).eps * abs(f)
                    and np.linalg.norm(gn) < gnorm):
                break
            t *= 0.5
        else:
            # no decrease is possible at machine precision; keep the point
            break
        x, f, g, H = xn, fn_, np.atleast_1d(np.asarray(gn, dtype=float)), Hn
    gnorm = float(np.linalg.norm(g))
    if gnorm <= tol:
        return MinimizationResult(x, float(f), gnorm, it, True)
    raise NoConvergence("Newton stalled with gradient norm %.3g after %d iterations"
                        % (gnorm, it))
