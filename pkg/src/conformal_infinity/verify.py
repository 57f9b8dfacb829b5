"""Numerical identity suite for the Clifford construction and the model conversions."""

from dataclasses import dataclass

import numpy as np
from scipy.linalg import expm

from .clifford import (G, G6, det_equals_Q_squared, transpose_identity_deviation, conjugation_identity_deviation,
                       in_identity_component, lie_basis, vector_rep, verify_clifford_relation)
from .forms import same_class
from .quadric import cone_point_of_unitary, unitary_of_cone_point
from .sampling import random_cone_points, random_hex
from .su22 import membership_violations, random_su22, random_unitary2
from .twistor import plane_of_unitary, unitary_of_plane


@dataclass(frozen=True)
class Check:
    name: str
    deviation: float
    tolerance: float

    @property
    def ok(self):
        return self.deviation <= self.tolerance


def identity_report(samples=1000, seed=0):
    rng = np.random.default_rng(seed)
    xs = random_hex(rng, samples)
    ys = random_hex(rng, samples)
    checks = []

    checks.append(Check("G X G = -X^T", max(transpose_identity_deviation(x) for x in xs), 0.0))
    checks.append(Check("conj X = 1/2 eps G G X  [eps^1234 = +1]",
                        max(conjugation_identity_deviation(x) for x in xs), 1e-12))
    checks.append(Check("X conj Y + Y conj X = 2<x,y>",
                        max(verify_clifford_relation(x, y) for x, y in zip(xs, ys)), 1e-10))

    def det_dev(x):
        d, q2 = det_equals_Q_squared(x)
        return abs(d - q2) / max(1.0, q2)
    checks.append(Check("det X = Q(x)^2 (relative)", max(det_dev(x) for x in xs), 1e-9))

    n_group = max(10, samples // 10)
    hom = metric = comp = 0.0
    for k in range(n_group):
        r1 = random_su22(seed=(seed, k, 1))
        r2 = random_su22(seed=(seed, k, 2))
        L1, L2 = vector_rep(r1), vector_rep(r2)
        hom = max(hom, np.abs(vector_rep(r1 @ r2) - L1 @ L2).max())
        metric = max(metric, np.abs(L1.T @ G6 @ L1 - G6).max())
        comp = max(comp, 0.0 if in_identity_component(L1) else 1.0)
    checks.append(Check("L(R1 R2) = L(R1) L(R2)", hom, 1e-8))
    checks.append(Check("L^T G6 L = G6", metric, 1e-9))
    checks.append(Check("L in SO+(4,2)", comp, 0.0))
    # +-1 give +I, +-i give -I: all four act trivially on the projective quadric.
    kernel = max(min(np.abs(vector_rep(c * np.eye(4)) - s * np.eye(6)).max() for s in (1, -1))
                 for c in (1, -1, 1j, -1j))
    checks.append(Check("{+-1, +-i} act trivially on [C]", kernel, 1e-12))

    basis = lie_basis()
    alg = max(np.abs(m @ G + G @ m.conj().T).max() for m in basis)
    stacked = np.array([np.concatenate([m.real.ravel(), m.imag.ravel()]) for m in basis])
    checks.append(Check("L_ab G + G L_ab^+ = 0", alg, 1e-12))
    checks.append(Check("15 generators independent (15 - rank)",
                        float(15 - np.linalg.matrix_rank(stacked)), 0.0))
    checks.append(Check("exp(L_ab) in U(2,2)",
                        max(max(membership_violations(expm(0.3 * m)).values()) for m in basis), 1e-10))

    cones = random_cone_points(rng, samples)
    rt = 0.0
    for x in cones:
        back = cone_point_of_unitary(unitary_of_cone_point(x)).representative
        rt = max(rt, 0.0 if same_class(back, x, tol=1e-8) else 1.0)
    checks.append(Check("cone -> U -> cone", rt, 0.0))

    tw = 0.0
    for _ in range(samples):
        u = random_unitary2(rng)
        tw = max(tw, np.abs(unitary_of_plane(plane_of_unitary(u)) - u).max())
    checks.append(Check("twistor: U -> plane -> U", tw, 1e-10))
    return checks
