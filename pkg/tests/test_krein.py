import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from nkappa.errors import DimensionError, NotHermitianError, NotInvolutiveError, ValidationError
from nkappa.inversion import projection_P
from nkappa.realization import Realization
from nkappa.krein import (
    is_j_selfadjoint,
    j_adjoint,
    subspace_signature,
    validate_symmetry,
)
from nkappa.numeric import rank_and_range

J4 = np.array([[0, 1, 0], [1, 0, 0], [0, 0, -1]])
A4 = np.array([[0, 1, 0], [0, 0, 0], [0, 0, -1]])
G4 = np.array([[0.5, -1], [1, 0], [0, -1]])


def test_negative_indices():
    assert validate_symmetry(J4).negative_index == 2
    assert validate_symmetry(np.eye(4)).negative_index == 0
    assert validate_symmetry([[0, 1], [1, 0]]).negative_index == 1


def test_symmetry_errors():
    with pytest.raises(NotHermitianError):
        validate_symmetry([[0, 1], [-1, 0]])
    with pytest.raises(NotInvolutiveError):
        validate_symmetry(np.diag([1.0, 2.0]))
    with pytest.raises(DimensionError):
        validate_symmetry(np.ones((2, 3)))


def test_gamma_plus_example4():
    printed = np.array([[1, 0.5, 0], [0, -1, 1]])
    np.testing.assert_allclose(j_adjoint(G4, None, J4), printed)


def test_gamma_plus_example2():
    J2 = np.array([[0, 1], [1, 0]])
    np.testing.assert_allclose(j_adjoint(np.eye(2), None, J2), J2)


def test_hilbert_adjoint_is_conjugate_transpose():
    T = np.array([[1 + 2j, 3], [0, -1j], [2, 2]])
    np.testing.assert_array_equal(j_adjoint(T), T.conj().T)


def test_j_adjoint_dimension_mismatch():
    with pytest.raises(DimensionError):
        j_adjoint(G4, None, np.eye(2))


def test_signatures_example4():
    P = projection_P(Realization(J4, A4, G4))
    assert subspace_signature(rank_and_range(P).basis, J4) == (1, 0, 1)
    assert subspace_signature(rank_and_range(np.eye(3) - P).basis, J4) == (0, 0, 1)
    assert subspace_signature(np.eye(3)[:, :2], np.eye(3)) == (2, 0, 0)


def test_signature_degenerate_reported():
    # e1 is neutral for the swap form
    assert subspace_signature(np.eye(3)[:, :1], J4) == (0, 1, 0)


def test_signature_rejects_dependent_basis():
    with pytest.raises(ValidationError):
        subspace_signature(np.array([[1, 2], [1, 2], [0, 0]]), J4)


def test_j_selfadjoint():
    assert is_j_selfadjoint(A4, J4)
    np.testing.assert_allclose(J4 @ A4, np.diag([0, 1, 1]))
    assert is_j_selfadjoint([[0, 1], [0, 0]], [[0, 1], [1, 0]])
    assert not is_j_selfadjoint([[0, 1], [0, 0]], np.eye(2))


def _symmetry(n, k, seed):
    rng = np.random.default_rng(seed)
    U, _ = np.linalg.qr(rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n)))
    return U @ np.diag([-1.0] * k + [1.0] * (n - k)) @ U.conj().T


cases = st.tuples(st.integers(1, 6), st.integers(0, 6), st.integers(0, 2**32 - 1)).map(
    lambda t: (t[0], min(t[1], t[0]), t[2]))


@settings(max_examples=50, deadline=None)
@given(cases)
def test_j_adjoint_involution(case):
    n, k, seed = case
    rng = np.random.default_rng(seed)
    Jd = _symmetry(n, k, seed)
    Jc = _symmetry(n + 1, min(k, n), seed + 1)
    T = rng.standard_normal((n + 1, n)) + 1j * rng.standard_normal((n + 1, n))
    back = j_adjoint(j_adjoint(T, Jd, Jc), Jc, Jd)
    assert np.linalg.norm(back - T) <= 1e-9 * np.linalg.norm(T)


@settings(max_examples=50, deadline=None)
@given(cases)
def test_signature_properties(case):
    n, k, seed = case
    rng = np.random.default_rng(seed)
    J = validate_symmetry(_symmetry(n, k, seed))
    assert J.negative_index == k
    assert subspace_signature(np.eye(n), J) == (n - k, 0, k)
    d = int(rng.integers(1, n + 1))
    basis = rng.standard_normal((n, d)) + 1j * rng.standard_normal((n, d))
    C = rng.standard_normal((d, d)) + 1j * rng.standard_normal((d, d))
    sig = subspace_signature(basis, J)
    assert sum(sig) == d
    assert subspace_signature(basis @ C, J) == sig
