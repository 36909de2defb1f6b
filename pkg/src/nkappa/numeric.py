"""Dense complex linear algebra with explicit tolerances.

All matrices are plain ``numpy`` arrays of dtype ``complex128``.  The
functions here are thin, deterministic wrappers around LAPACK (through
``numpy``/``scipy``) that add the tolerance bookkeeping used by the rest of
the package.
"""

from dataclasses import dataclass
from typing import NamedTuple, Optional

import numpy as np
import scipy.linalg

from .errors import (
    DimensionError,
    NotHermitianError,
    SingularMatrixError,
    ValidationError,
)

__all__ = [
    "Tolerance",
    "DEFAULT_TOL",
    "as_matrix",
    "hermitian_eigen",
    "inertia",
    "solve_or_invert",
    "rank_and_range",
    "null_space",
    "principal_angles",
    "cluster_eigenvalues",
]


@dataclass(frozen=True)
class Tolerance:
    """Thresholds shared by every numerical decision.

    relative_eps
        Relative accuracy demanded from residual checks.
    condition_cap
        Largest condition number accepted as "boundedly invertible".
    sign_eps
        Relative threshold below which eigenvalues / singular values
        count as zero.
    """

    relative_eps: float = 1e-9
    condition_cap: float = 1e8
    sign_eps: float = 1e-9

    def __post_init__(self):
        if not 0 <= self.relative_eps < 1:
            raise ValidationError("relative_eps must lie in [0, 1)", "tolerance")
        if not self.condition_cap > 1:
            raise ValidationError("condition_cap must exceed 1", "tolerance")
        if self.sign_eps < 0:
            raise ValidationError("sign_eps must be nonnegative", "tolerance")

    def as_dict(self):
        return {
            "relative_eps": self.relative_eps,
            "condition_cap": self.condition_cap,
            "sign_eps": self.sign_eps,
        }


DEFAULT_TOL = Tolerance()


def as_matrix(M, name="matrix", ndim=2):
    """Return ``M`` as a finite complex array with ``ndim`` dimensions."""
    X = np.array(M, dtype=complex)
    if X.ndim != ndim:
        raise DimensionError(f"{name} must be {ndim}-dimensional, got shape {X.shape}")
    if not np.all(np.isfinite(X)):
        raise ValidationError(f"{name} has non-finite entries", "finite")
    return X


def _norm(M):
    return np.linalg.norm(M, 2) if M.size else 0.0


def _require_square(M, name):
    if M.shape[0] != M.shape[1]:
        raise DimensionError(f"{name} must be square, got shape {M.shape}")


class Eigen(NamedTuple):
    values: np.ndarray
    vectors: np.ndarray
    signs: np.ndarray


def hermitian_eigen(M, tol=DEFAULT_TOL):
    """Eigendecomposition of a Hermitian matrix.

    Returns ``(values, vectors, signs)`` with ascending real eigenvalues, a
    unitary matrix of eigenvectors and, per eigenvalue, ``-1``, ``0`` or
    ``+1``.  An eigenvalue counts as zero when its modulus is below
    ``sign_eps * max(1, ||M||)``.
    """
    M = as_matrix(M, "M")
    _require_square(M, "M")
    scale = _norm(M)
    if _norm(M - M.conj().T) > tol.relative_eps * max(scale, np.finfo(float).tiny):
        raise NotHermitianError("matrix is not Hermitian within tolerance")
    H = 0.5 * (M + M.conj().T)
    if H.shape[0] == 0:
        return Eigen(np.zeros(0), np.zeros((0, 0), complex), np.zeros(0, int))
    values, vectors = np.linalg.eigh(H)
    cut = tol.sign_eps * max(1.0, scale)
    signs = np.where(values > cut, 1, np.where(values < -cut, -1, 0))
    return Eigen(values, vectors, signs)


def inertia(M, tol=DEFAULT_TOL):
    """Return ``(n_plus, n_zero, n_minus)`` of a Hermitian matrix."""
    signs = hermitian_eigen(M, tol).signs
    return (int(np.sum(signs > 0)), int(np.sum(signs == 0)), int(np.sum(signs < 0)))


class Solution(NamedTuple):
    x: np.ndarray
    condition: float
    bounded: bool


def solve_or_invert(M, rhs=None, tol=DEFAULT_TOL):
    """Solve ``M x = rhs`` or invert ``M`` when ``rhs`` is None.

    Returns ``(x, condition, bounded)`` where ``condition`` is the 2-norm
    condition number and ``bounded`` is False when it exceeds
    ``tol.condition_cap``.  Raises :class:`SingularMatrixError` when ``M`` is
    singular to working precision.
    """
    M = as_matrix(M, "M")
    _require_square(M, "M")
    n = M.shape[0]
    if rhs is None:
        rhs = np.eye(n, dtype=complex)
    else:
        rhs = np.asarray(rhs, dtype=complex)
        if rhs.shape[0] != n:
            raise DimensionError(f"rhs has {rhs.shape[0]} rows, expected {n}")
    if n == 0:
        return Solution(np.zeros(rhs.shape, complex), 1.0, True)
    s = np.linalg.svd(M, compute_uv=False)
    if s[-1] <= n * np.finfo(float).eps * s[0]:
        rank = int(np.sum(s > n * np.finfo(float).eps * s[0]))
        raise SingularMatrixError(f"matrix is singular (numerical rank {rank} < {n})", rank)
    cond = float(s[0] / s[-1])
    x = np.linalg.solve(M, rhs)
    return Solution(x, cond, cond <= tol.condition_cap)


class Range(NamedTuple):
    rank: int
    basis: np.ndarray


def rank_and_range(M, tol=DEFAULT_TOL):
    """Numerical rank and an orthonormal basis of the column space.

    Singular values at or below ``sign_eps * sigma_max`` are dropped.
    """
    M = np.asarray(M, dtype=complex)
    if M.size == 0:
        return Range(0, np.zeros((M.shape[0], 0), complex))
    U, s, _ = np.linalg.svd(M, full_matrices=False)
    if s[0] == 0:
        return Range(0, np.zeros((M.shape[0], 0), complex))
    r = int(np.sum(s > tol.sign_eps * s[0]))
    return Range(r, U[:, :r])


def null_space(M, tol=DEFAULT_TOL, reference=None):
    """Orthonormal basis of the numerical null space of ``M``.

    Singular values at or below ``sign_eps * reference`` count as zero;
    ``reference`` defaults to the largest singular value.  Pass an a priori
    scale when ``M`` may be zero up to rounding.
    """
    M = np.asarray(M, dtype=complex)
    n = M.shape[1]
    if M.shape[0] == 0 or n == 0:
        return np.eye(n, dtype=complex)
    _, s, Vh = np.linalg.svd(M, full_matrices=True)
    ref = s[0] if reference is None else reference
    if s.size == 0 or ref == 0:
        return np.eye(n, dtype=complex)
    r = int(np.sum(s > tol.sign_eps * ref))
    return Vh[r:].conj().T


def principal_angles(X, Y):
    """Largest principal angle between the column spaces of X and Y.

    Returns ``pi/2`` when the dimensions differ and 0 for two trivial
    subspaces.
    """
    X = np.asarray(X, dtype=complex)
    Y = np.asarray(Y, dtype=complex)
    if X.shape[1] != Y.shape[1]:
        return np.pi / 2
    if X.shape[1] == 0:
        return 0.0
    return float(np.max(scipy.linalg.subspace_angles(X, Y)))


def cluster_eigenvalues(values, radius):
    """Group nearby eigenvalues.

    Returns a list of ``(mean, multiplicity)`` sorted by real then imaginary
    part.  Two eigenvalues join a cluster when they are within ``radius`` of
    some member (single linkage).
    """
    values = list(np.asarray(values, dtype=complex))
    clusters = []
    while values:
        group = [values.pop(0)]
        grown = True
        while grown:
            grown = False
            for v in list(values):
                if min(abs(v - g) for g in group) <= radius:
                    group.append(v)
                    values.remove(v)
                    grown = True
        clusters.append((complex(np.mean(group)), len(group)))
    clusters.sort(key=lambda c: (round(c[0].real, 12), round(c[0].imag, 12)))
    return clusters


def hermitian_part(M):
    return 0.5 * (M + M.conj().T)


def matrix_norm(M):
    """Spectral norm, 0 for empty arrays."""
    return _norm(np.asarray(M))


def require_square(M, name="matrix"):
    _require_square(M, name)
