import numpy as np
import pytest

from conformal_infinity.clifford import G, lie_basis
from conformal_infinity.errors import NotPseudoUnitary
from conformal_infinity.su22 import check_membership, moebius_act, random_su22, random_unitary2

I2 = np.eye(2)


def test_membership_examples():
    check_membership(np.eye(4))
    check_membership(G)
    with pytest.raises(NotPseudoUnitary, match="A\\^\\+A - C\\^\\+C = I"):
        check_membership(np.diag([2, 1, 1, 1]))


def test_moebius_examples(rng):
    u = random_unitary2(rng)
    assert np.allclose(moebius_act(np.eye(4), u), u)
    assert np.allclose(moebius_act(G, u), -u)


def test_block_swap_is_not_a_member():
    swap = np.block([[np.zeros((2, 2)), I2], [I2, np.zeros((2, 2))]])
    # swap G swap^dagger = -G, so it reverses the form instead of preserving it
    assert np.allclose(swap @ G @ swap.conj().T, -G)
    with pytest.raises(NotPseudoUnitary):
        check_membership(swap)
    assert np.allclose(moebius_act(swap, I2), I2)


def test_random_su22_examples():
    assert np.allclose(random_su22(coefficients=np.zeros(15)), np.eye(4))
    r = random_su22(seed=3)
    check_membership(r, tol=1e-9, special=True)
    assert np.array_equal(r, random_su22(seed=3))


def test_action_law_and_unitarity(rng):
    for k in range(1000):
        g1, g2 = random_su22(seed=(k, 1)), random_su22(seed=(k, 2))
        u = random_unitary2(rng)
        lhs = moebius_act(g1 @ g2, u)
        assert np.abs(lhs - moebius_act(g1, moebius_act(g2, u))).max() <= 1e-8
        assert np.abs(lhs @ lhs.conj().T - I2).max() <= 1e-9


def test_phase_invariance(rng):
    for k in range(200):
        g = random_su22(seed=(k, 7))
        u = random_unitary2(rng)
        theta = rng.uniform(0, 2 * np.pi)
        assert np.abs(moebius_act(np.exp(1j * theta) * g, u) - moebius_act(g, u)).max() <= 1e-10


def test_exp_of_each_generator_is_member():
    from scipy.linalg import expm
    for m in lie_basis():
        check_membership(expm(0.7 * m))
