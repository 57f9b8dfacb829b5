"""Hermitian-matrix model of Minkowski space and its Cayley chart in U(2).

``sigma_of`` packs an event into a 2x2 Hermitian matrix with the Pauli
matrices (sigma_4 = I). Note det(sigma(x)) = (x4)^2 - |x|^2 = -q(x).
"""

import numpy as np

from .errors import AtInfinity, NotHermitian, NotUnimodular, NotUnitary
from .forms import mink_vector

I2 = np.eye(2, dtype=complex)

PAULI = (
    np.array([[0, 1], [1, 0]], dtype=complex),
    np.array([[0, -1j], [1j, 0]], dtype=complex),
    np.array([[1, 0], [0, -1]], dtype=complex),
    I2.copy(),
)

# |det(U - I)| at or below this is conformal infinity; shared by every converter.
INFINITY_TOL = 1e-9
HERMITIAN_TOL = 1e-9
UNITARY_TOL = 1e-10
UNIMODULAR_TOL = 1e-10


def as_hermitian(h):
    """Symmetrize ``h``; reject if its anti-Hermitian part is not negligible."""
    h = np.asarray(h, dtype=complex)
    if h.shape != (2, 2):
        raise NotHermitian(f"expected a 2x2 matrix, got shape {h.shape}")
    skew = np.abs(h - h.conj().T).max() / 2
    if skew > HERMITIAN_TOL * max(1.0, np.abs(h).max()):
        raise NotHermitian(f"anti-Hermitian part {skew:.3e} exceeds tolerance")
    return (h + h.conj().T) / 2


def as_unitary(u, tol=UNITARY_TOL):
    u = np.asarray(u, dtype=complex)
    if u.shape != (2, 2):
        raise NotUnitary(f"expected a 2x2 matrix, got shape {u.shape}")
    err = np.abs(u @ u.conj().T - I2).max()
    if err > tol:
        raise NotUnitary(f"|U U^dagger - I| = {err:.3e}")
    return u


def sigma_of(v):
    x1, x2, x3, x4 = mink_vector(v)
    return np.array([[x4 + x3, x1 - 1j * x2],
                     [x1 + 1j * x2, x4 - x3]])


def sigma_inverse(h):
    h = as_hermitian(h)
    x1 = h[1, 0].real
    x2 = h[1, 0].imag
    x3 = (h[0, 0].real - h[1, 1].real) / 2
    x4 = (h[0, 0].real + h[1, 1].real) / 2
    return np.array([x1, x2, x3, x4])


def cayley(h):
    """Cayley transform (h - iI)(h + iI)^-1 of a Hermitian matrix."""
    h = as_hermitian(h)
    return (h - 1j * I2) @ np.linalg.inv(h + 1j * I2)


def is_at_infinity(u):
    return bool(abs(np.linalg.det(np.asarray(u, dtype=complex) - I2)) <= INFINITY_TOL)


def cayley_inverse(u):
    u = np.asarray(u, dtype=complex)
    d = abs(np.linalg.det(u - I2))
    if d <= INFINITY_TOL:
        raise AtInfinity(f"|det(U - I)| = {d:.3e}: U lies on conformal infinity")
    return as_hermitian(1j * (I2 + u) @ np.linalg.inv(I2 - u))


def lorentz_of(a):
    """Lorentz matrix of A in SL(2,C), read off from A sigma(e_mu) A^dagger."""
    a = np.asarray(a, dtype=complex)
    det = np.linalg.det(a)
    if abs(det - 1) > UNIMODULAR_TOL:
        raise NotUnimodular(f"det A = {det}")
    lam = np.empty((4, 4))
    for mu in range(4):
        lam[:, mu] = sigma_inverse(a @ PAULI[mu] @ a.conj().T)
    return lam
