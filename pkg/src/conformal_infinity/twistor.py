"""Twistor model: totally isotropic subspaces of C^{2,2}.

Planes (2-dim) are points of compactified Minkowski space, lines (1-dim) are
null geodesics. The pseudo-Hermitian form is <v|w> = v^dagger G w with
G = diag(1, 1, -1, -1).
"""

from dataclasses import dataclass

import numpy as np

from .clifford import G
from .errors import DegenerateBasis, NotIsotropic

ISOTROPY_TOL = 1e-10
INCIDENCE_TOL = 1e-9


def twistor_form(v, w):
    return np.conj(v) @ G @ w


@dataclass(frozen=True, eq=False)
class IsotropicLine:
    """Projective isotropic vector, scaled so its largest-modulus entry is 1."""

    v: np.ndarray

    def __post_init__(self):
        v = np.array(self.v, dtype=complex)
        if v.shape != (4,) or not np.any(v):
            raise NotIsotropic("an isotropic line needs a nonzero 4-vector")
        v = v / v[np.argmax(np.abs(v))]
        if abs(twistor_form(v, v)) > ISOTROPY_TOL:
            raise NotIsotropic(f"<v|v> = {twistor_form(v, v).real:.3e}")
        v.flags.writeable = False
        object.__setattr__(self, "v", v)

    def __eq__(self, other):
        if not isinstance(other, IsotropicLine):
            return NotImplemented
        return bool(np.allclose(self.v, other.v, atol=1e-9))


@dataclass(frozen=True, eq=False)
class IsotropicPlane:
    """Totally isotropic 2-plane; basis is brought to the form [U; I]."""

    basis: np.ndarray

    def __post_init__(self):
        b = np.array(self.basis, dtype=complex)
        if b.shape != (4, 2) or np.linalg.matrix_rank(b, tol=1e-10 * max(1.0, np.abs(b).max())) < 2:
            raise DegenerateBasis("plane basis must be a rank-2 4x2 matrix")
        scale = np.abs(b).max() ** 2
        gram = b.conj().T @ G @ b
        if np.abs(gram).max() > ISOTROPY_TOL * scale:
            raise NotIsotropic(f"plane is not totally isotropic: {np.abs(gram).max():.3e}")
        # For a totally isotropic plane the lower block is invertible.
        b = b @ np.linalg.inv(b[2:])
        b.flags.writeable = False
        object.__setattr__(self, "basis", b)

    @property
    def unitary(self):
        return self.basis[:2]


def plane_of_unitary(u):
    return IsotropicPlane(np.vstack([np.asarray(u, dtype=complex), np.eye(2)]))


def unitary_of_plane(p):
    """P Q^-1 for the basis [P; Q]."""
    b = np.asarray(p.basis if isinstance(p, IsotropicPlane) else p, dtype=complex)
    if np.linalg.matrix_rank(b) < 2:
        raise DegenerateBasis("plane basis must have rank 2")
    return b[:2] @ np.linalg.inv(b[2:])


def line_on_plane(line, plane):
    v = line.v if isinstance(line, IsotropicLine) else np.asarray(line, dtype=complex)
    b = plane.basis
    coef, *_ = np.linalg.lstsq(b, v, rcond=None)
    return bool(np.linalg.norm(b @ coef - v) <= INCIDENCE_TOL * np.linalg.norm(v))


def geodesics_intersect(l1, l2):
    v1, v2 = l1.v, l2.v
    return bool(abs(twistor_form(v1, v2)) <= INCIDENCE_TOL * np.linalg.norm(v1) * np.linalg.norm(v2))


def _orthogonal_pair(v):
    """G-orthonormal a, b (<a|a> = 1, <b|b> = -1) spanning v^perp modulo v."""
    _, _, vh = np.linalg.svd((G @ v).conj()[None, :])
    perp = vh[1:].conj().T  # 4x3 basis of v^perp
    gram = perp.conj().T @ G @ perp
    w, vecs = np.linalg.eigh(gram)
    a = perp @ vecs[:, -1] / np.sqrt(w[-1])
    b = perp @ vecs[:, 0] / np.sqrt(-w[0])
    return a, b


def planes_through_line(line, theta):
    """One member of the circle of isotropic planes containing ``line``."""
    v = line.v
    a, b = _orthogonal_pair(v)
    w = a + np.exp(1j * theta) * b
    return IsotropicPlane(np.column_stack([v, w]))


def planes_meet(p1, p2, tol=1e-8):
    """Dimension of the intersection of two planes (0, 1 or 2)."""
    stacked = np.hstack([p1.basis, p2.basis])
    s = np.linalg.svd(stacked, compute_uv=False)
    rank = int(np.sum(s > tol * s[0]))
    return 4 - rank
