"""Convex polygons: validation, shoelace area/centroid, fan triangulation.

Only planar polytopes are supported by the geometric operations; the
types carry a ``dimension`` so higher-dimensional callers fail loudly
with :class:`Unsupported` instead of silently doing the wrong thing.
"""

from __future__ import annotations

import json
import math
import os
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .errors import (DegenerateInput, NonConvex, PolytopeFormatError,
                     UnknownName, Unsupported)

# Cross products are compared against this fraction of diam**2.
REL_TOL = 1e-12


@dataclass(frozen=True, eq=False)
class Polytope:
    """Convex polytope given by its vertex cycle (counter-clockwise in 2-D).

    Construct through :func:`validate_polygon` or :func:`builtin`; the raw
    constructor does no checking.
    """

    vertices: np.ndarray
    dimension: int = 2

    def __post_init__(self):
        v = np.array(self.vertices, dtype=float)
        v.setflags(write=False)
        object.__setattr__(self, "vertices", v)

    def __len__(self):
        return len(self.vertices)

    def __repr__(self):
        pts = ", ".join("(%g, %g)" % tuple(p) for p in self.vertices)
        return "Polytope([%s])" % pts

    def translated(self, shift: Sequence[float]) -> "Polytope":
        return Polytope(self.vertices + np.asarray(shift, dtype=float),
                        self.dimension)

    def scaled(self, factor: float) -> "Polytope":
        # a negative factor is a rotation by pi in the plane: orientation kept
        return Polytope(self.vertices * float(factor), self.dimension)

    def same_cycle(self, other: "Polytope", atol: float = 0.0) -> bool:
        """True if ``other`` lists the same vertex cycle, up to start index."""
        if len(self) != len(other):
            return False
        for k in range(len(other)):
            if np.allclose(np.roll(other.vertices, -k, axis=0), self.vertices,
                           rtol=0.0, atol=atol):
                return True
        return False


@dataclass(frozen=True, eq=False)
class Simplex:
    vertices: np.ndarray
    signed_volume: float

    @classmethod
    def from_vertices(cls, vertices) -> "Simplex":
        v = np.array(vertices, dtype=float)
        d = v.shape[1]
        if v.shape[0] != d + 1:
            raise DegenerateInput("a %d-simplex needs %d vertices, got %d"
                                  % (d, d + 1, v.shape[0]))
        vol = np.linalg.det(v[1:] - v[0]) / math.factorial(d)
        if vol == 0.0:
            raise DegenerateInput("simplex has zero volume")
        v.setflags(write=False)
        return cls(v, float(vol))

    @property
    def dimension(self) -> int:
        return self.vertices.shape[1]


def _cross(a, b):
    return a[..., 0] * b[..., 1] - a[..., 1] * b[..., 0]


def _signed_area(v: np.ndarray) -> float:
    x, y = v[:, 0], v[:, 1]
    return 0.5 * float(np.sum(x * np.roll(y, -1) - np.roll(x, -1) * y))


def validate_polygon(raw_vertices) -> Polytope:
    """Check a planar vertex cycle and return it as a counter-clockwise Polytope.

    The input must already be a cycle around the boundary; only its
    orientation is normalized. Clockwise input is reversed while keeping
    the first vertex in place.
    """
    try:
        v = np.array(raw_vertices, dtype=float)
    except (TypeError, ValueError) as exc:
        raise DegenerateInput("vertices are not a numeric array: %s" % exc)
    if v.ndim != 2:
        raise DegenerateInput("expected a sequence of points")
    if v.shape[1] != 2:
        raise Unsupported("only planar polygons are supported (got dimension %d)"
                          % v.shape[1])
    n = v.shape[0]
    if n < 3:
        raise DegenerateInput("a polygon needs at least 3 vertices, got %d" % n)
    if not np.all(np.isfinite(v)):
        raise DegenerateInput("vertex coordinates must be finite")

    diam2 = float(np.max(np.sum((v[:, None, :] - v[None, :, :]) ** 2, axis=-1)))
    if diam2 == 0.0:
        raise DegenerateInput("all vertices coincide")
    eps = REL_TOL * diam2

    edges = np.roll(v, -1, axis=0) - v
    if np.any(np.sum(edges ** 2, axis=1) <= eps):
        raise DegenerateInput("repeated consecutive vertices")
    turns = _cross(edges, np.roll(edges, -1, axis=0))
    if np.any(np.abs(turns) <= eps):
        k = int(np.argmin(np.abs(turns)))
        raise DegenerateInput("vertices %d, %d, %d are collinear"
                              % (k, (k + 1) % n, (k + 2) % n))
    if not (np.all(turns > 0) or np.all(turns < 0)):
        raise NonConvex("consecutive edge cross products change sign")

    # equal-sign turns can still wind more than once (pentagram)
    angles = np.arctan2(turns, np.sum(edges * np.roll(edges, -1, axis=0), axis=1))
    if abs(abs(float(np.sum(angles))) - 2 * math.pi) > 1e-6:
        raise NonConvex("vertex cycle winds more than once")

    area = _signed_area(v)
    if abs(area) <= eps:
        raise DegenerateInput("polygon has zero area")
    if area < 0:
        v = np.concatenate([v[:1], v[:0:-1]])
    return Polytope(v, 2)


def _require_planar(p: Polytope):
    if p.dimension != 2:
        raise Unsupported("operation implemented for planar polytopes only")


def area(p: Polytope) -> float:
    """Shoelace area of a polygon."""
    _require_planar(p)
    return abs(_signed_area(p.vertices))


def centroid(p: Polytope) -> np.ndarray:
    """Area-weighted centroid."""
    _require_planar(p)
    v = p.vertices - p.vertices[0]  # shifted for conditioning
    w = np.roll(v, -1, axis=0)
    c = _cross(v, w)
    a = 0.5 * np.sum(c)
    cx = np.sum((v[:, 0] + w[:, 0]) * c) / (6.0 * a)
    cy = np.sum((v[:, 1] + w[:, 1]) * c) / (6.0 * a)
    return np.array([cx, cy]) + p.vertices[0]


def triangulate(p: Polytope) -> list[Simplex]:
    """Fan triangulation from vertex 0."""
    _require_planar(p)
    v = p.vertices
    return [Simplex.from_vertices([v[0], v[k], v[k + 1]])
            for k in range(1, len(v) - 1)]


def contains(p: Polytope, point, strict: bool = True) -> bool:
    """Point-in-convex-polygon test."""
    _require_planar(p)
    v = p.vertices
    q = np.asarray(point, dtype=float)
    c = _cross(np.roll(v, -1, axis=0) - v, q - v)
    return bool(np.all(c > 0)) if strict else bool(np.all(c >= 0))


_BUILTINS = {
    # moment pentagon of CP^2 # 2(-CP^2)
    "pentagon": [(-1, -1), (1, -1), (1, 0), (0, 1), (-1, 1)],
    # moment trapezium of CP^2 # (-CP^2), listed clockwise in the literature
    "trapezium": [(2, -1), (-1, 2), (-1, 0), (0, -1)],
    "square": [(-1, -1), (1, -1), (1, 1), (-1, 1)],
}

BUILTIN_NAMES = tuple(_BUILTINS)


def builtin(name: str) -> Polytope:
    try:
        raw = _BUILTINS[name]
    except KeyError:
        raise UnknownName("unknown polytope %r (choose from %s)"
                          % (name, ", ".join(BUILTIN_NAMES))) from None
    return validate_polygon(raw)


def polytope_from_dict(obj) -> Polytope:
    """Build a polygon from the ``{"vertices": [[x, y], ...]}`` schema."""
    if not isinstance(obj, dict):
        raise PolytopeFormatError("top level must be a JSON object", field=None)
    if "vertices" not in obj:
        raise PolytopeFormatError("missing field 'vertices'", field="vertices")
    verts = obj["vertices"]
    if not isinstance(verts, list):
        raise PolytopeFormatError("field 'vertices' must be an array",
                                  field="vertices")
    for k, pt in enumerate(verts):
        ok = (isinstance(pt, list) and len(pt) == 2
              and all(isinstance(c, (int, float)) and not isinstance(c, bool)
                      for c in pt))
        if not ok:
            raise PolytopeFormatError(
                "field 'vertices[%d]' must be an [x, y] number pair" % k,
                field="vertices[%d]" % k)
    return validate_polygon(verts)


def load_polytope_json(path: str | os.PathLike) -> Polytope:
    with open(path, encoding="utf-8") as fh:
        try:
            obj = json.load(fh)
        except json.JSONDecodeError as exc:
            raise PolytopeFormatError("invalid JSON: %s" % exc) from None
    return polytope_from_dict(obj)


def polytope_to_dict(p: Polytope) -> dict:
    return {"vertices": [[float(x) for x in pt] for pt in p.vertices]}
