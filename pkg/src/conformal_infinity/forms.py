"""Minkowski and R^{4,2} vectors, their quadratic forms, and the cone quotients.

Vectors are plain float arrays: a Minkowski event is ``(x1, x2, x3, x4)`` with
``x4 = ct`` (code units, c = 1), a point of R^{4,2} is ``(x1, ..., x6)``.
The forms accept a trailing axis of length 4 (resp. 6) and broadcast over any
leading batch axes.
"""

from dataclasses import dataclass

import numpy as np

from .errors import LightConeSingular, NotOnCone, ZeroVector

ETA = np.diag([1.0, 1.0, 1.0, -1.0])
ETA6 = np.diag([1.0, 1.0, 1.0, -1.0, 1.0, -1.0])

# |Q(x)| <= CONE_TOL * sum(x_i^2) counts as on the cone.
CONE_TOL = 1e-9

# First nonzero coordinate in this order (0-based 3, 5, 0, 1, 2, 4) is made positive.
SIGN_FIX_ORDER = (3, 5, 0, 1, 2, 4)
_SIGN_FIX_ZERO = 1e-12


def mink_vector(x1, x2=None, x3=None, x4=None):
    """Build an event from four numbers or from one length-4 sequence."""
    if x2 is None:
        v = np.asarray(x1, dtype=float)
    else:
        v = np.array([x1, x2, x3, x4], dtype=float)
    if v.shape[-1] != 4:
        raise ValueError(f"Minkowski vector needs 4 components, got shape {v.shape}")
    if not np.all(np.isfinite(v)):
        raise ValueError("Minkowski vector components must be finite")
    return v


def hex_vector(*coords):
    if len(coords) == 1:
        v = np.asarray(coords[0], dtype=float)
    else:
        v = np.array(coords, dtype=float)
    if v.shape[-1] != 6:
        raise ValueError(f"R^(4,2) vector needs 6 components, got shape {v.shape}")
    if not np.all(np.isfinite(v)):
        raise ValueError("R^(4,2) vector components must be finite")
    return v


def q_form(v):
    v = np.asarray(v, dtype=float)
    return v[..., 0] ** 2 + v[..., 1] ** 2 + v[..., 2] ** 2 - v[..., 3] ** 2


def mink_inner(v, w):
    v = np.asarray(v, dtype=float)
    w = np.asarray(w, dtype=float)
    return v[..., 0] * w[..., 0] + v[..., 1] * w[..., 1] + v[..., 2] * w[..., 2] - v[..., 3] * w[..., 3]


def Q_form(v):
    v = np.asarray(v, dtype=float)
    return (v[..., 0] ** 2 + v[..., 1] ** 2 + v[..., 2] ** 2
            - v[..., 3] ** 2 + v[..., 4] ** 2 - v[..., 5] ** 2)


def hex_inner(v, w):
    v = np.asarray(v, dtype=float)
    w = np.asarray(w, dtype=float)
    p = v * w
    return p[..., 0] + p[..., 1] + p[..., 2] - p[..., 3] + p[..., 4] - p[..., 5]


def penrose_inversion(v):
    """x -> x / q(x); an involution off the light cone of the origin."""
    v = mink_vector(v)
    q = q_form(v)
    if q == 0.0:
        raise LightConeSingular(f"inversion undefined on the light cone: {v}")
    return v / q


def conformal_inversion(v, r0=1.0):
    """(x, t) -> r0^2 (x, t) / (x^2 - t^2)."""
    v = mink_vector(v)
    q = q_form(v)
    if q == 0.0:
        raise LightConeSingular(f"conformal inversion undefined on the light cone: {v}")
    return r0 ** 2 * v / q


def on_cone(v, tol=CONE_TOL):
    v = np.asarray(v, dtype=float)
    return abs(Q_form(v)) <= tol * float(np.dot(v, v))


def _check_cone(v):
    v = hex_vector(v)
    if not np.any(v):
        raise ZeroVector("the origin of R^(4,2) is not a cone point")
    if not on_cone(v):
        raise NotOnCone(f"Q(x) = {Q_form(v):.3e} for x = {v}")
    return v


def cylinder_normalize(v):
    """Positive rescaling so that x1^2+x2^2+x3^2+x5^2 = x4^2+x6^2 = 1."""
    v = np.asarray(v, dtype=float)
    space = v[0] ** 2 + v[1] ** 2 + v[2] ** 2 + v[4] ** 2
    time = v[3] ** 2 + v[5] ** 2
    return v / np.sqrt(0.5 * (space + time))


def sign_fix(v):
    for k in SIGN_FIX_ORDER:
        if abs(v[k]) > _SIGN_FIX_ZERO:
            return v if v[k] > 0 else -v
    return v


def _frozen(v):
    v = np.array(v, dtype=float)
    v.flags.writeable = False
    return v


@dataclass(frozen=True, eq=False)
class RayClass:
    """Cone point modulo positive scaling, stored cylinder-normalized."""

    representative: np.ndarray

    def __eq__(self, other):
        if not isinstance(other, RayClass):
            return NotImplemented
        return bool(np.allclose(self.representative, other.representative, atol=1e-9, rtol=0))

    def __hash__(self):
        return hash(tuple(np.round(self.representative, 8)))


@dataclass(frozen=True, eq=False)
class ProjClass:
    """Cone point modulo nonzero scaling: cylinder-normalized and sign-fixed."""

    representative: np.ndarray

    def __eq__(self, other):
        if not isinstance(other, ProjClass):
            return NotImplemented
        return same_class(self.representative, other.representative)

    def __hash__(self):
        return hash(tuple(np.round(self.representative, 8)))


def ray_class(v):
    v = _check_cone(v)
    return RayClass(_frozen(cylinder_normalize(v)))


def proj_class(v):
    v = _check_cone(v)
    return ProjClass(_frozen(sign_fix(cylinder_normalize(v))))


def same_class(v, w, tol=1e-9):
    """True when two cone points agree up to a nonzero real factor."""
    a = cylinder_normalize(v)
    b = cylinder_normalize(w)
    return bool(np.allclose(a, b, atol=tol, rtol=0) or np.allclose(a, -b, atol=tol, rtol=0))
