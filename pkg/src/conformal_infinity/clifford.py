"""Explicit Cl(4,2) on twistor space C^4.

Six 4x4 matrices GAMMA[0..5] realize the Clifford map x -> X = sum x^a Gamma_a
through the antilinear operator v -> X conj(v). The same matrices give the
vector representation of SU(2,2) on R^{4,2} and a basis of su(2,2).

Indices here are 0-based: GAMMA[0] is Gamma_1.
"""

import itertools
from dataclasses import dataclass

import numpy as np

from .errors import NotInGroup
from .forms import ETA6, Q_form, hex_inner, hex_vector

G = np.diag([1, 1, -1, -1]).astype(complex)
G6 = ETA6

_i = 1j
GAMMA = tuple(np.array(m, dtype=complex) for m in (
    [[0, 0, _i, 0], [0, 0, 0, -_i], [_i, 0, 0, 0], [0, -_i, 0, 0]],
    [[0, 0, 1, 0], [0, 0, 0, 1], [1, 0, 0, 0], [0, 1, 0, 0]],
    [[0, 0, 0, -_i], [0, 0, -_i, 0], [0, -_i, 0, 0], [-_i, 0, 0, 0]],
    [[0, _i, 0, 0], [-_i, 0, 0, 0], [0, 0, 0, _i], [0, 0, -_i, 0]],
    [[0, 0, 0, -1], [0, 0, 1, 0], [0, 1, 0, 0], [-1, 0, 0, 0]],
    [[0, 1, 0, 0], [-1, 0, 0, 0], [0, 0, 0, -1], [0, 0, 1, 0]],
))
for _g in GAMMA:
    _g.flags.writeable = False

_GAMMA_STACK = np.stack(GAMMA)

# Largest imaginary part tolerated in the extracted SO(4,2) matrix.
VECTOR_REP_TOL = 1e-9


def _levi_civita(sign=1):
    eps = np.zeros((4, 4, 4, 4))
    for perm in itertools.permutations(range(4)):
        inversions = sum(perm[a] > perm[b] for a in range(4) for b in range(a + 1, 4))
        eps[perm] = sign * (-1) ** inversions
    return eps


EPSILON = _levi_civita(+1)


@dataclass(frozen=True, eq=False)
class CliffordElement:
    X: np.ndarray
    source: np.ndarray

    def apply(self, v):
        return apply_antilinear(self, v)


def clifford_matrix(v):
    """X = sum_a x^a Gamma_a; broadcasts over leading axes of ``v``."""
    v = np.asarray(v, dtype=float)
    return np.tensordot(v, _GAMMA_STACK, axes=([-1], [0]))


def clifford_element(v):
    v = hex_vector(v)
    return CliffordElement(clifford_matrix(v), v)


def apply_antilinear(x, v):
    """(X^ v)^i = X^i_j conj(v^j)."""
    X = x.X if isinstance(x, CliffordElement) else clifford_matrix(x)
    return X @ np.conj(np.asarray(v, dtype=complex))


def frobenius_coefficients(m):
    """Coordinates of ``m`` along the Gamma's: trace(Gamma_b^dagger m) / 4."""
    return np.einsum("bij,ij->b", _GAMMA_STACK.conj(), np.asarray(m)) / 4


def transpose_identity_deviation(v):
    X = clifford_matrix(v)
    return float(np.abs(G @ X @ G + X.T).max())


def conjugation_identity_deviation(v, sign=1):
    """Max deviation of conj(X)^i_j = 1/2 eps^{imnk} G_mj G_nl X^l_k."""
    X = clifford_matrix(v)
    rhs = 0.5 * sign * np.einsum("imnk,mj,nl,lk->ij", EPSILON, G, G, X)
    return float(np.abs(X.conj() - rhs).max())


def verify_clifford_relation(x, y):
    """||X conj(Y) + Y conj(X) - 2<x,y> I||_inf."""
    X = clifford_matrix(x)
    Y = clifford_matrix(y)
    lhs = X @ Y.conj() + Y @ X.conj()
    return float(np.abs(lhs - 2 * hex_inner(x, y) * np.eye(4)).max())


def det_equals_Q_squared(x):
    """Return (det X, Q(x)^2). The imaginary part of det X must vanish."""
    d = np.linalg.det(clifford_matrix(x))
    if abs(d.imag) > 1e-10 * max(1.0, abs(d)):
        raise ArithmeticError(f"det X has imaginary part {d.imag:.3e}")
    return float(d.real), float(Q_form(x) ** 2)


def vector_rep(r):
    """SO(4,2) matrix L(R) with R Gamma_a conj(R)^-1 = Gamma_b L^b_a.

    This is R acting on the antilinear operators Gamma^ by conjugation.
    Scalars {1, -1} map to the identity and {i, -i} to minus the identity.
    """
    r = np.asarray(r, dtype=complex)
    rbar_inv = np.linalg.inv(r).conj()
    images = r @ _GAMMA_STACK @ rbar_inv
    L = np.stack([frobenius_coefficients(m) for m in images], axis=1)
    residue = np.abs(L.imag).max()
    recon = np.tensordot(L.T, _GAMMA_STACK, axes=([1], [0]))
    span_err = np.abs(recon - images).max()
    if residue > VECTOR_REP_TOL or span_err > VECTOR_REP_TOL * max(1.0, np.abs(images).max()):
        raise NotInGroup(f"R does not act on the Gamma span (imag {residue:.2e}, span {span_err:.2e})")
    return L.real


def preserves_metric(L, tol=1e-9):
    return bool(np.abs(L.T @ G6 @ L - G6).max() <= tol)


def in_identity_component(L):
    """det L = +1 and the time-like {4,6} minor has positive determinant."""
    minor = L[3, 3] * L[5, 5] - L[3, 5] * L[5, 3]
    return bool(np.linalg.det(L) > 0 and minor > 0)


def lie_basis():
    """The 15 matrices Gamma_a conj(Gamma_b) - Gamma_b conj(Gamma_a), a < b."""
    return [GAMMA[a] @ GAMMA[b].conj() - GAMMA[b] @ GAMMA[a].conj()
            for a in range(6) for b in range(a + 1, 6)]
