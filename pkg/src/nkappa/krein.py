"""Fundamental symmetries and indefinite adjoints.

Coordinates are chosen so that the associated Hilbert product is the
Euclidean one and the indefinite product is ``[x, y] = y^* J x``.
"""

from dataclasses import dataclass, field

import numpy as np

from .errors import DimensionError, NotHermitianError, NotInvolutiveError, ValidationError
from .numeric import DEFAULT_TOL, as_matrix, hermitian_eigen, matrix_norm, rank_and_range

__all__ = [
    "FundamentalSymmetry",
    "validate_symmetry",
    "j_adjoint",
    "subspace_signature",
    "is_j_selfadjoint",
    "gram",
]


@dataclass(frozen=True, eq=False)
class FundamentalSymmetry:
    """A validated Hermitian involution ``J`` with its negative index."""

    J: np.ndarray = field(repr=False)
    negative_index: int

    @property
    def dim(self):
        return self.J.shape[0]

    def inner(self, x, y):
        """Indefinite product ``[x, y]``."""
        return np.vdot(y, self.J @ x)


def validate_symmetry(J, tol=DEFAULT_TOL):
    """Check that ``J`` is a Hermitian involution and count its negative squares."""
    if isinstance(J, FundamentalSymmetry):
        return J
    J = as_matrix(J, "J")
    if J.shape[0] != J.shape[1]:
        raise DimensionError(f"J must be square, got shape {J.shape}")
    n = J.shape[0]
    scale = max(1.0, matrix_norm(J))
    if matrix_norm(J - J.conj().T) > tol.relative_eps * scale:
        raise NotHermitianError("J is not Hermitian")
    if matrix_norm(J @ J - np.eye(n)) > tol.relative_eps * scale:
        raise NotInvolutiveError("J is not an involution (J J != I)")
    signs = hermitian_eigen(J, tol).signs
    return FundamentalSymmetry(0.5 * (J + J.conj().T), int(np.sum(signs < 0)))


def _sym(J, n, side):
    if J is None:
        return np.eye(n, dtype=complex)
    M = J.J if isinstance(J, FundamentalSymmetry) else np.asarray(J, dtype=complex)
    if M.shape != (n, n):
        raise DimensionError(f"{side} symmetry has shape {M.shape}, expected {(n, n)}")
    return M


def j_adjoint(T, J_dom=None, J_cod=None):
    """Adjoint of ``T : dom -> cod`` with respect to the indefinite products.

    ``None`` stands for a Hilbert side (identity symmetry).  The result is
    ``J_dom T^* J_cod``.
    """
    T = np.asarray(T, dtype=complex)
    if T.ndim != 2:
        raise DimensionError("T must be a matrix")
    cod, dom = T.shape
    return _sym(J_dom, dom, "domain") @ T.conj().T @ _sym(J_cod, cod, "codomain")


def gram(basis, J):
    """Gram matrix ``basis^* J basis`` of the indefinite product."""
    basis = np.asarray(basis, dtype=complex)
    Jm = _sym(J, basis.shape[0], "space")
    G = basis.conj().T @ Jm @ basis
    return 0.5 * (G + G.conj().T)


def subspace_signature(basis, J, tol=DEFAULT_TOL):
    """Return ``(n_plus, n_zero, n_minus)`` of the product restricted to span(basis)."""
    basis = as_matrix(basis, "basis")
    k = basis.shape[1]
    if k == 0:
        return (0, 0, 0)
    if rank_and_range(basis, tol).rank < k:
        raise ValidationError("basis columns are linearly dependent", "independent_basis")
    signs = hermitian_eigen(gram(basis, J), tol).signs
    return (int(np.sum(signs > 0)), int(np.sum(signs == 0)), int(np.sum(signs < 0)))


def is_j_selfadjoint(A, J, tol=DEFAULT_TOL):
    """True when ``J A`` is Hermitian within ``tol.relative_eps``."""
    A = as_matrix(A, "A")
    Jm = _sym(J, A.shape[0], "space")
    if A.shape[0] != A.shape[1]:
        raise DimensionError(f"A must be square, got shape {A.shape}")
    JA = Jm @ A
    return bool(matrix_norm(JA - JA.conj().T) <= tol.relative_eps * max(1.0, matrix_norm(JA)))
