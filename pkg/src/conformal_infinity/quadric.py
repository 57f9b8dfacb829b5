"""Projective quadric model of compactified Minkowski space.

A cone point x of R^{4,2} maps to the unitary matrix

    U(x) = 1/(x4 + i x6) [[-x3 + i x5, -x1 + i x2],
                          [-x1 - i x2,  x3 + i x5]]

which depends only on the line through x. Conformal infinity is the
hyperplane x5 = x6, where det(U - I) = -2i (x5 - x6)/(x4 + i x6) vanishes.

The finite part is reached through ``embed_plus``; with these conventions
U(embed_plus(x, t)) equals cayley(sigma(x, -t)), and ``cone_point_of_unitary``
inverts accordingly.
"""

from dataclasses import dataclass

import numpy as np

from .errors import ZeroVector
from .forms import (ProjClass, RayClass, _check_cone, cylinder_normalize, mink_vector,
                    proj_class)
from .hermitian import INFINITY_TOL, I2, cayley_inverse, is_at_infinity, sigma_inverse

INFINITY_REP = np.array([0.0, 0.0, 0.0, 0.0, 1.0, 1.0])

_PLANE_TOL = 1e-8


@dataclass(frozen=True, eq=False)
class ConePoint:
    v: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "v", _check_cone(self.v))


def _vec(p):
    if isinstance(p, ConePoint):
        return p.v
    if isinstance(p, (RayClass, ProjClass)):
        return p.representative
    return _check_cone(p)


def unitary_of_cone_point(p):
    x1, x2, x3, x4, x5, x6 = _vec(p)
    den = x4 + 1j * x6
    # x4 = x6 = 0 forces x = 0 on the cone.
    assert den != 0, "x4 + i x6 vanished on a cone point"
    return np.array([[-x3 + 1j * x5, -x1 + 1j * x2],
                     [-x1 - 1j * x2, x3 + 1j * x5]]) / den


def det_u_minus_identity(p):
    """Closed form of det(U(x) - I)."""
    x = _vec(p)
    return -2j * (x[4] - x[5]) / (x[3] + 1j * x[5])


def infinity_test(p):
    """x5 = x6, judged on the cylinder-normalized representative.

    There |x4 + i x6| = 1, so the test is |det(U(x) - I)| <= INFINITY_TOL,
    the same threshold ``is_at_infinity`` applies to the matrix.
    """
    x = cylinder_normalize(_vec(p))
    return bool(2 * abs(x[4] - x[5]) <= INFINITY_TOL)


def embed_plus(v):
    x1, x2, x3, t = mink_vector(v)
    s = x1 * x1 + x2 * x2 + x3 * x3
    return np.array([x1, x2, x3, t, 0.5 * (1 - s + t * t), -0.5 * (1 + s - t * t)])


def embed_minus(v):
    x = embed_plus(v)
    x[4:] = -x[4:]
    return x


def _plane_from_unitary(u):
    """Invert U(x) on the stratum x5 = x6 with x4 = 1: recover (n, h)."""
    tau = np.trace(u)
    h = -1j * tau / (2 - tau)
    if abs(h.imag) > _PLANE_TOL * max(1.0, abs(h)):
        raise ArithmeticError(f"plane offset not real: {h}")
    h = h.real
    den = 1 + 1j * h
    n3 = ((u[1, 1] - u[0, 0]) * den / 2).real
    n1 = (-(u[0, 1] + u[1, 0]) * den / 2).real
    n2 = ((u[0, 1] - u[1, 0]) * den / 2j).real
    n = np.array([n1, n2, n3])
    norm = np.linalg.norm(n)
    if abs(norm - 1) > _PLANE_TOL * max(1.0, abs(h)):
        raise ArithmeticError(f"recovered plane normal has length {norm}")
    return n / norm, h


def cone_point_of_unitary(u):
    """Class of cone points x with U(x) = u; total on U(2)."""
    u = np.asarray(u, dtype=complex)
    if not is_at_infinity(u):
        x1, x2, x3, t = sigma_inverse(cayley_inverse(u))
        return proj_class(embed_plus([x1, x2, x3, -t]))
    if np.abs(u - I2).max() <= INFINITY_TOL:
        return proj_class(INFINITY_REP)
    n, h = _plane_from_unitary(u)
    return proj_class(np.array([n[0], n[1], n[2], 1.0, h, h]))


@dataclass(frozen=True)
class QuadraticCoords:
    y: tuple


def quadratic_coords(r):
    """y_a = x^a x^4 (a = 1..5) on the representative with (x4)^2 + (x6)^2 = 1.

    On the cone this is the cylinder normalization. Raw vectors are scaled by
    the time part alone and are not required to lie on the cone.
    """
    if isinstance(r, (RayClass, ProjClass)):
        x = r.representative
    else:
        x = np.asarray(r, dtype=float)
        norm = np.hypot(x[3], x[5])
        if norm == 0:
            raise ZeroVector("x4 = x6 = 0 has no cylinder normalization")
        x = x / norm
    return QuadraticCoords(tuple(float(x[a] * x[3]) for a in range(5)))
