"""Lie sphere dictionary between R^3 objects and rays of the (4,2) quadric.

Points, oriented spheres (signed radius), oriented planes and the point at
infinity of R^3 each correspond to a cone point. Conformal infinity is the
set of planes together with the point at infinity; a null geodesic trapped
there is a family of parallel planes x . n = tan(psi) closed up by infinity.
"""

from dataclasses import dataclass

import numpy as np

from .errors import AtInfinityPoint
from .forms import ProjClass, cylinder_normalize, proj_class
from .hermitian import INFINITY_TOL
from .quadric import INFINITY_REP

POINT_TOL = 1e-9
_UNIT_TOL = 1e-12


def _vec3(x):
    x = np.array(x, dtype=float)
    if x.shape != (3,) or not np.all(np.isfinite(x)):
        raise ValueError(f"expected a finite 3-vector, got {x!r}")
    x.flags.writeable = False
    return x


def _unit3(n):
    n = _vec3(n)
    if abs(np.linalg.norm(n) - 1) > _UNIT_TOL:
        raise ValueError(f"normal must be a unit vector, |n| = {np.linalg.norm(n)}")
    return n


@dataclass(frozen=True, eq=False)
class Point:
    x: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "x", _vec3(self.x))

    def close_to(self, other, tol=1e-8):
        return isinstance(other, Point) and np.allclose(self.x, other.x, atol=tol, rtol=tol)


@dataclass(frozen=True, eq=False)
class Sphere:
    center: np.ndarray
    signed_radius: float

    def __post_init__(self):
        object.__setattr__(self, "center", _vec3(self.center))
        object.__setattr__(self, "signed_radius", float(self.signed_radius))

    def close_to(self, other, tol=1e-8):
        return (isinstance(other, Sphere)
                and np.allclose(self.center, other.center, atol=tol, rtol=tol)
                and np.isclose(self.signed_radius, other.signed_radius, atol=tol, rtol=tol))


@dataclass(frozen=True, eq=False)
class Plane:
    """Oriented plane x . n = h with unit normal n."""

    n: np.ndarray
    h: float

    def __post_init__(self):
        object.__setattr__(self, "n", _unit3(self.n))
        object.__setattr__(self, "h", float(self.h))

    def close_to(self, other, tol=1e-8):
        return (isinstance(other, Plane)
                and np.allclose(self.n, other.n, atol=tol, rtol=tol)
                and np.isclose(self.h, other.h, atol=tol, rtol=tol))


@dataclass(frozen=True)
class InfinityPoint:
    def close_to(self, other, tol=1e-8):
        return isinstance(other, InfinityPoint)


@dataclass(frozen=True, eq=False)
class InfinityGeodesic:
    """Closed null geodesic at infinity, labelled by a unit vector n."""

    n: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "n", _unit3(self.n))


def lie_vector(obj):
    """Homogeneous R^{4,2} coordinates of a Lie object (not normalized)."""
    if isinstance(obj, InfinityPoint):
        return INFINITY_REP.copy()
    if isinstance(obj, Plane):
        return np.array([*obj.n, 1.0, obj.h, obj.h])
    if isinstance(obj, Point):
        x, t = obj.x, 0.0
    elif isinstance(obj, Sphere):
        x, t = obj.center, obj.signed_radius
    else:
        raise TypeError(f"not a Lie object: {obj!r}")
    s = float(x @ x)
    return np.array([*x, t, 0.5 * (1 - s + t * t), -0.5 * (1 + s - t * t)])


def lie_to_ray(obj):
    return proj_class(lie_vector(obj))


def classify_ray(r):
    x = cylinder_normalize(r.representative if isinstance(r, ProjClass) else r)
    if 2 * abs(x[4] - x[5]) > INFINITY_TOL:
        x = x / (x[4] - x[5])
        if abs(x[3]) <= POINT_TOL:
            return Point(x[:3])
        return Sphere(x[:3], x[3])
    if abs(x[3]) > INFINITY_TOL:
        x = x / x[3]
        n = x[:3] / np.linalg.norm(x[:3])
        return Plane(n, 0.5 * (x[4] + x[5]))
    return InfinityPoint()


def geodesic_vector(g, psi):
    n = g.n if isinstance(g, InfinityGeodesic) else _unit3(g)
    c, s = np.cos(psi), np.sin(psi)
    return np.array([c * n[0], c * n[1], c * n[2], c, s, s])


def geodesic_at_infinity(g, psi):
    """gamma(psi) = [(cos psi n, cos psi, sin psi, sin psi)], psi in [0, pi]."""
    return proj_class(geodesic_vector(g, psi))


def plane_fronts(g, psis):
    """Parallel planes x . n = tan(psi), one per angle."""
    n = g.n if isinstance(g, InfinityGeodesic) else _unit3(g)
    fronts = []
    for k, psi in enumerate(psis):
        if abs(np.cos(psi)) <= INFINITY_TOL:
            raise AtInfinityPoint(f"entry {k}: psi = {psi} is the point at infinity, not a plane")
        fronts.append(Plane(n, np.tan(psi)))
    return fronts
