"""U(2,2), SU(2,2) and the fractional-linear action on U(2)."""

import numpy as np
from scipy.linalg import expm

from .clifford import G, lie_basis
from .errors import NotPseudoUnitary

MEMBERSHIP_TOL = 1e-10
_SINGULAR_TOL = 1e-12


def blocks(m):
    m = np.asarray(m)
    return m[:2, :2], m[:2, 2:], m[2:, :2], m[2:, 2:]


def membership_violations(m):
    """Deviation of each block identity equivalent to M G M^dagger = G."""
    A, B, C, D = blocks(np.asarray(m, dtype=complex))
    h = lambda x: x.conj().T
    I = np.eye(2)
    return {
        "A^+A - C^+C = I": float(np.abs(h(A) @ A - h(C) @ C - I).max()),
        "D^+D - B^+B = I": float(np.abs(h(D) @ D - h(B) @ B - I).max()),
        "A^+B - C^+D = 0": float(np.abs(h(A) @ B - h(C) @ D).max()),
    }


def check_membership(m, tol=MEMBERSHIP_TOL, special=False):
    """Return ``m`` as a complex array if it lies in U(2,2) (SU(2,2) if ``special``)."""
    m = np.array(m, dtype=complex)
    if m.shape != (4, 4):
        raise NotPseudoUnitary(f"expected a 4x4 matrix, got shape {m.shape}")
    violations = membership_violations(m)
    worst = max(violations, key=violations.get)
    if violations[worst] > tol:
        raise NotPseudoUnitary(f"{worst} violated by {violations[worst]:.3e}")
    if special:
        det = np.linalg.det(m)
        if abs(det - 1) > tol:
            raise NotPseudoUnitary(f"det = {det} is not 1")
    return m


def moebius_act(g, u):
    """U -> (AU + B)(CU + D)^-1."""
    A, B, C, D = blocks(np.asarray(g, dtype=complex))
    u = np.asarray(u, dtype=complex)
    den = C @ u + D
    # CU + D is invertible for every member of U(2,2) and unitary U.
    assert abs(np.linalg.det(den)) >= _SINGULAR_TOL, "CU + D singular: g is not in U(2,2)"
    return (A @ u + B) @ np.linalg.inv(den)


def act_on_plane(g, basis):
    return np.asarray(g, dtype=complex) @ np.asarray(basis, dtype=complex)


def normalize_determinant(m):
    """Divide by the principal fourth root of det so the result has det 1."""
    m = np.asarray(m, dtype=complex)
    return m / np.linalg.det(m) ** 0.25


def random_su22(seed=None, scale=0.5, coefficients=None):
    """exp of a real combination of the su(2,2) basis, determinant-normalized.

    Coefficients are uniform in [-scale, scale] unless given explicitly.
    """
    if coefficients is None:
        rng = np.random.default_rng(seed)
        coefficients = rng.uniform(-scale, scale, size=15)
    coefficients = np.asarray(coefficients, dtype=float)
    generator = np.tensordot(coefficients, np.stack(lie_basis()), axes=1)
    return check_membership(normalize_determinant(expm(generator)), tol=1e-9, special=True)


def random_unitary2(rng):
    """Haar-ish random 2x2 unitary via QR of a complex Gaussian matrix."""
    z = rng.normal(size=(2, 2)) + 1j * rng.normal(size=(2, 2))
    q, r = np.linalg.qr(z)
    d = np.diag(r)
    return q * (d / np.abs(d))
