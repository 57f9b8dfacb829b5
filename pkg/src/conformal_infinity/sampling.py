"""Random test inputs covering every stratum of compactified Minkowski space."""

import numpy as np

from .lie_sphere import InfinityPoint, Plane, Point, Sphere
from .quadric import INFINITY_REP, embed_plus


def random_unit3(rng):
    n = rng.normal(size=3)
    return n / np.linalg.norm(n)


def random_event(rng, scale=2.0):
    return rng.normal(scale=scale, size=4)


def random_finite_cone_point(rng, scale=2.0):
    return embed_plus(random_event(rng, scale)) * rng.choice([-1, 1]) * rng.uniform(0.1, 10)


def random_plane_cone_point(rng, h_scale=10.0):
    n = random_unit3(rng)
    h = rng.uniform(-h_scale, h_scale)
    return np.array([*n, 1.0, h, h]) * rng.choice([-1, 1]) * rng.uniform(0.1, 10)


def random_cone_points(rng, n, mix=(0.8, 0.15, 0.05)):
    """``n`` cone points: finite, plane-type and the point at infinity in ratio ``mix``."""
    kinds = rng.choice(3, size=n, p=mix)
    out = np.empty((n, 6))
    for k, kind in enumerate(kinds):
        if kind == 0:
            out[k] = random_finite_cone_point(rng)
        elif kind == 1:
            out[k] = random_plane_cone_point(rng)
        else:
            out[k] = INFINITY_REP * rng.choice([-1, 1]) * rng.uniform(0.1, 10)
    return out


def random_hermitian(rng, scale=2.0):
    a = rng.normal(scale=scale, size=(2, 2)) + 1j * rng.normal(scale=scale, size=(2, 2))
    return (a + a.conj().T) / 2


def random_hex(rng, n=None):
    return rng.normal(size=6 if n is None else (n, 6))


def random_lie_object(rng):
    kind = rng.integers(4)
    if kind == 0:
        return Point(rng.uniform(-10, 10, size=3))
    if kind == 1:
        return Sphere(rng.uniform(-10, 10, size=3), rng.uniform(-10, 10))
    if kind == 2:
        return Plane(random_unit3(rng), rng.uniform(-10, 10))
    return InfinityPoint()
