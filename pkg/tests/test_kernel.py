import numpy as np
import pytest

from nkappa.errors import PoleError
from nkappa.kernel import (
    SamplePlan,
    check_symmetry,
    estimate_negative_squares,
    kernel_gram,
    nevanlinna_kernel,
)
from nkappa.realization import Realization, derivative


def test_diagonal_example2(ex2):
    N = nevanlinna_kernel(ex2, 1j, -1j)
    np.testing.assert_allclose(N, [[0, -1], [-1, 2j]], atol=1e-14)
    h = 1e-6
    fd = (ex2(1j + h) - ex2(1j)) / h
    np.testing.assert_allclose(N, fd, atol=1e-5)


def test_off_diagonal_quotient(ex4):
    z, w = 0.5 + 1j, -1.2 + 0.7j
    expected = (ex4(z) - ex4(w).conj().T) / (z - np.conj(w))
    np.testing.assert_allclose(nevanlinna_kernel(ex4, z, w), expected, atol=1e-14)
    np.testing.assert_allclose(nevanlinna_kernel(ex4, z, w).conj().T,
                               nevanlinna_kernel(ex4, w, z), atol=1e-13)


def test_diagonal_branch_matches_difference(ex4):
    z = 0.4 + 0.9j
    np.testing.assert_allclose(nevanlinna_kernel(ex4, z, np.conj(z)), derivative(ex4, z))
    # the two branches agree near the diagonal
    near = nevanlinna_kernel(ex4, z + 1e-6, np.conj(z))
    np.testing.assert_allclose(near, derivative(ex4, z), atol=1e-5)


def test_kernel_pole(ex2):
    with pytest.raises(PoleError):
        nevanlinna_kernel(ex2, 0, 1j)


def test_gram_is_hermitian(ex4):
    rng = np.random.default_rng(0)
    pts = SamplePlan(count=6, seed=2).points(exclude=[0, -1])
    H = rng.standard_normal((2, 6)) + 1j * rng.standard_normal((2, 6))
    G = kernel_gram(ex4, pts, H)
    np.testing.assert_allclose(G, G.conj().T, atol=1e-13)


def test_estimates_reach_index(ex2, ex4):
    k4, hist4 = estimate_negative_squares(ex4, SamplePlan(count=12), directions=2)
    assert k4 == 2 == ex4.J.negative_index
    assert hist4 == sorted(hist4) and len(hist4) == 12
    k2, hist2 = estimate_negative_squares(ex2, SamplePlan(count=8), directions=2)
    assert k2 == 1 == ex2.J.negative_index
    assert hist2 == sorted(hist2)


def test_positive_case_has_no_negative_squares():
    rng = np.random.default_rng(5)
    H = rng.standard_normal((4, 4))
    R = Realization(np.eye(4), H + H.T, rng.standard_normal((4, 2)))
    for count in [1, 4, 12]:
        k, hist = estimate_negative_squares(R, SamplePlan(count=count, seed=1))
        assert k == 0 and set(hist) == {0}


def test_estimate_is_deterministic(ex4):
    plan = SamplePlan(count=5, seed=9)
    assert estimate_negative_squares(ex4, plan) == estimate_negative_squares(ex4, plan)


def test_symmetry_residual(ex2, ex4):
    assert check_symmetry(ex4) < 1e-12
    assert check_symmetry(ex2) < 1e-12
    bad = Realization(ex4.J.J, [[0, 1, 0], [0, 0, 0], [1, 0, -1]], ex4.Gamma, check=False)
    assert check_symmetry(bad) > 1e-3
