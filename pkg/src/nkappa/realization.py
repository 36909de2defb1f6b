"""Realizations ``Q(z) = S + Gamma^+ (A - z)^{-1} Gamma`` in a Pontryagin space.

The state space is ``C^n`` with fundamental symmetry ``J``; the Hilbert
space of values is ``C^m``.  ``Gamma^+ = Gamma^* J``.
"""

from dataclasses import dataclass, field

import numpy as np
import scipy.linalg

from .errors import (
    AssumptionError,
    DimensionError,
    NotHermitianError,
    NotHolomorphicAtInfinityError,
    NotJSelfAdjointError,
    ParametersInsufficientError,
    PoleError,
)
from .krein import FundamentalSymmetry, gram, is_j_selfadjoint, validate_symmetry
from .numeric import (
    DEFAULT_TOL,
    as_matrix,
    hermitian_eigen,
    matrix_norm,
    null_space,
    rank_and_range,
    solve_or_invert,
)
from .sampling import sample_points

__all__ = [
    "Realization",
    "KLFormRealization",
    "evaluate",
    "derivative",
    "derivative_at_infinity",
    "minimality",
    "reduce_to_minimal",
    "normalize_gram",
    "to_resolvent_form",
    "from_resolvent_form",
    "evaluate_kl",
    "kernel_of_Q",
    "split_at_pole",
    "regularize_derivative",
    "pole_radius",
    "spectrum",
]


class Realization:
    """Data ``(J, A, Gamma, S)`` of ``Q(z) = S + Gamma^+ (A - z)^{-1} Gamma``.

    ``S = None`` means the holomorphic-at-infinity form ``S = 0``.  Pass
    ``check=False`` to skip validation (used for negative controls).
    Instances are treated as immutable.
    """

    def __init__(self, J, A, Gamma, S=None, tol=DEFAULT_TOL, check=True):
        A = as_matrix(A, "A")
        Gamma = as_matrix(Gamma, "Gamma")
        if check:
            J = validate_symmetry(J, tol)
        elif not isinstance(J, FundamentalSymmetry):
            Jm = as_matrix(J, "J")
            J = FundamentalSymmetry(Jm, int(np.sum(np.linalg.eigvalsh(0.5 * (Jm + Jm.conj().T)) < 0))
                                    if Jm.size else 0)
        n = J.dim
        if A.shape != (n, n):
            raise DimensionError(f"A has shape {A.shape}, expected {(n, n)}")
        if Gamma.shape[0] != n:
            raise DimensionError(f"Gamma has {Gamma.shape[0]} rows, expected {n}")
        m = Gamma.shape[1]
        if S is not None:
            S = as_matrix(S, "S")
            if S.shape != (m, m):
                raise DimensionError(f"S has shape {S.shape}, expected {(m, m)}")
            if check and matrix_norm(S - S.conj().T) > tol.relative_eps * max(1.0, matrix_norm(S)):
                raise NotHermitianError("S is not Hermitian", "s_hermitian")
            if check:
                S = 0.5 * (S + S.conj().T)
        if check and n and not is_j_selfadjoint(A, J, tol):
            raise NotJSelfAdjointError("J A is not Hermitian")
        self.J = J
        self.A = A
        self.Gamma = Gamma
        self.S = S

    @property
    def n(self):
        return self.A.shape[0]

    @property
    def m(self):
        return self.Gamma.shape[1]

    @property
    def kappa_bound(self):
        return self.J.negative_index

    @property
    def Gamma_plus(self):
        return self.Gamma.conj().T @ self.J.J

    @property
    def S_or_zero(self):
        return np.zeros((self.m, self.m), complex) if self.S is None else self.S

    @property
    def holomorphic_at_infinity(self):
        return self.S is None or not np.any(self.S)

    def __call__(self, z):
        return evaluate(self, z)

    def __repr__(self):
        return f"Realization(n={self.n}, m={self.m}, kappa<={self.kappa_bound})"


def spectrum(A):
    return np.linalg.eigvals(A) if A.size else np.zeros(0, complex)


def pole_radius(A):
    """Distance below which a point counts as lying on the spectrum of ``A``."""
    return 1e-6 * max(1.0, matrix_norm(A))


def split_radius(A):
    """Clustering radius for root subspaces; wider than :func:`pole_radius`."""
    return 1e-4 * max(1.0, matrix_norm(A))


def _check_off_spectrum(A, z, what="A"):
    ev = spectrum(A)
    if ev.size:
        i = int(np.argmin(np.abs(ev - z)))
        if abs(ev[i] - z) < pole_radius(A):
            raise PoleError(f"z = {z} lies on the spectrum of {what} (eigenvalue {ev[i]:.6g})",
                            complex(ev[i]))


def resolvent_apply(A, z, X):
    """``(A - z)^{-1} X`` after checking that ``z`` is off the spectrum."""
    _check_off_spectrum(A, z)
    n = A.shape[0]
    if n == 0:
        return np.zeros(X.shape, complex)
    return np.linalg.solve(A - z * np.eye(n), X)


def evaluate(R, z):
    """``Q(z) = S + Gamma^+ (A - z)^{-1} Gamma``."""
    z = complex(z)
    return R.S_or_zero + R.Gamma_plus @ resolvent_apply(R.A, z, R.Gamma)


def derivative(R, z):
    """``Q'(z) = Gamma^+ (A - z)^{-2} Gamma``."""
    z = complex(z)
    X = resolvent_apply(R.A, z, R.Gamma)
    return R.Gamma_plus @ resolvent_apply(R.A, z, X)


def derivative_at_infinity(R):
    """``lim z Q(z) = -Gamma^+ Gamma`` for the holomorphic-at-infinity form."""
    if not R.holomorphic_at_infinity:
        raise NotHolomorphicAtInfinityError("realization has a nonzero constant term S")
    G = R.Gamma_plus @ R.Gamma
    return -0.5 * (G + G.conj().T)


def reachable_subspace(A, Gamma, tol=DEFAULT_TOL):
    """Orthonormal basis of ``span{A^k Gamma h}``, built by block orthogonal iteration."""
    n = A.shape[0]
    r, V = rank_and_range(Gamma, tol)
    keep = tol.sign_eps * max(1.0, matrix_norm(A))
    block = V
    for _ in range(n):
        if r == n or block.shape[1] == 0:
            break
        W = A @ block
        W = W - V @ (V.conj().T @ W)
        W = W - V @ (V.conj().T @ W)
        # block is orthonormal, so ||W|| <= ||A||: threshold is relative to ||A||
        U, s, _ = np.linalg.svd(W, full_matrices=False)
        block = U[:, s > keep]
        V = np.hstack([V, block])
        r = V.shape[1]
    return V


def minimality(R, tol=DEFAULT_TOL):
    """Return ``(is_minimal, reachable_basis)``.

    The reachable subspace ``span{A^k Gamma h : 0 <= k < n}`` coincides with
    the closed span of ``(A - z)^{-1} Gamma h`` over the resolvent set.
    """
    V = reachable_subspace(R.A, R.Gamma, tol)
    return V.shape[1] == R.n, V


def normalize_gram(A, Gamma, G, tol=DEFAULT_TOL):
    """Change coordinates so that a nondegenerate Gram matrix ``G`` becomes an involution.

    ``G`` plays the role of ``J`` in ``Gamma^* G (A - z)^{-1} Gamma``.
    Returns ``(J, A', Gamma')`` describing the same function with ``J``
    diagonal with entries +-1.
    """
    values, U, signs = hermitian_eigen(G, tol)
    if np.any(signs == 0):
        raise AssumptionError("Gram matrix is degenerate", "nondegenerate")
    T = U * (1.0 / np.sqrt(np.abs(values)))
    Tinv = (U * np.sqrt(np.abs(values))).conj().T
    J = np.diag(signs.astype(float)).astype(complex)
    return J, Tinv @ A @ T, Tinv @ Gamma


def reduce_to_minimal(R, tol=DEFAULT_TOL):
    """Minimal realization of the same function.

    Restrict to the reachable subspace, then divide out its isotropic part
    (the intersection with its ``J``-orthogonal complement), which is
    ``A``-invariant.  The quotient Gram matrix is normalized to a
    fundamental symmetry.
    """
    V = reachable_subspace(R.A, R.Gamma, tol)
    A_v = V.conj().T @ R.A @ V
    G_v = V.conj().T @ R.J.J @ V
    Gam_v = V.conj().T @ R.Gamma
    if V.shape[1] == 0:
        return Realization(np.zeros((0, 0)), np.zeros((0, 0)), np.zeros((0, R.m)), R.S, tol)
    values, U, signs = hermitian_eigen(0.5 * (G_v + G_v.conj().T), tol)
    W = U[:, signs != 0]
    J, A_q, Gam_q = normalize_gram(W.conj().T @ A_v @ W, W.conj().T @ Gam_v,
                                   np.diag(values[signs != 0]), tol)
    A_q = 0.5 * (A_q + J @ A_q.conj().T @ J)
    return Realization(J, A_q, Gam_q, R.S, tol)


@dataclass(frozen=True, eq=False)
class KLFormRealization:
    """Krein-Langer form anchored at a non-real point ``z0``.

    ``Q(z) = Q0_star + (z - conj(z0)) Gamma_z0^+ (I + (z - z0)(A - z)^{-1}) Gamma_z0``
    with ``Q0_star = Q(z0)^*``.
    """

    z0: complex
    Q0_star: np.ndarray = field(repr=False)
    Gamma_z0: np.ndarray = field(repr=False)
    J: FundamentalSymmetry = field(repr=False)
    A: np.ndarray = field(repr=False)


def evaluate_kl(KL, z):
    z = complex(z)
    n = KL.A.shape[0]
    Gp = KL.Gamma_z0.conj().T @ KL.J.J
    inner = KL.Gamma_z0 + (z - KL.z0) * resolvent_apply(KL.A, z, KL.Gamma_z0)
    return KL.Q0_star + (z - np.conj(KL.z0)) * (Gp @ inner) if n else KL.Q0_star.copy()


def from_resolvent_form(R, z0, tol=DEFAULT_TOL):
    """Anchor ``R`` at ``z0``: ``Gamma_z0 = (A - z0)^{-1} Gamma``, ``Q0_star = Q(conj z0)``."""
    z0 = complex(z0)
    if abs(z0.imag) <= tol.sign_eps:
        raise AssumptionError(f"reference point z0 = {z0} must be non-real", "nonreal_point")
    Gz0 = resolvent_apply(R.A, z0, R.Gamma)
    return KLFormRealization(z0, evaluate(R, np.conj(z0)), Gz0, R.J, R.A.copy())


def to_resolvent_form(KL, tol=DEFAULT_TOL):
    """Recover ``(S, Gamma)``: ``Gamma = (A - z0) Gamma_z0`` and ``S = Q(conj z0) - Gamma^+ (A - conj z0)^{-1} Gamma``."""
    z0 = complex(KL.z0)
    _check_off_spectrum(KL.A, z0)
    n = KL.A.shape[0]
    Gamma = (KL.A - z0 * np.eye(n)) @ KL.Gamma_z0
    Gp = Gamma.conj().T @ KL.J.J
    S = KL.Q0_star - Gp @ resolvent_apply(KL.A, np.conj(z0), Gamma)
    S = 0.5 * (S + S.conj().T)
    return Realization(KL.J, KL.A, Gamma, S, tol)


def kernel_of_Q(R, sample_count=10, seed=0, tol=DEFAULT_TOL):
    """Orthonormal basis of the common kernel of ``Q(z_k)`` over seeded sample points."""
    zs = sample_points(sample_count, seed, exclude=spectrum(R.A))
    stack = np.vstack([evaluate(R, z) for z in zs])
    if not np.any(stack):
        return np.eye(R.m, dtype=complex)
    return null_space(stack, tol)


def _invariant_subspace(A, select):
    T, Z, sdim = scipy.linalg.schur(A, output="complex", sort=select)
    return Z[:, :sdim]


def split_at_pole(R, alpha, tol=DEFAULT_TOL):
    """Split ``Q = Q_alpha + H_alpha`` at the generalized pole ``alpha``.

    ``Q_alpha`` carries the root subspace of ``A`` at ``alpha`` (and at
    ``conj(alpha)`` when ``alpha`` is non-real, so both summands keep the
    symmetry ``Q(conj z) = Q(z)^*``); ``H_alpha`` carries the complementary
    ``A``-invariant subspace and the constant term.  Both are returned as
    realizations with normalized fundamental symmetries.
    """
    alpha = complex(alpha)
    ev = spectrum(R.A)
    # eigenvalues of a k x k Jordan block scatter like eps**(1/k)
    radius = split_radius(R.A)
    targets = [alpha] if abs(alpha.imag) <= radius else [alpha, alpha.conjugate()]
    if not ev.size or np.min(np.abs(ev - alpha)) >= radius:
        raise AssumptionError(f"alpha = {alpha} is not an eigenvalue of A", "alpha_in_spectrum")

    def near(x):
        return any(abs(x - t) < radius for t in targets)

    L = _invariant_subspace(R.A, near)
    M = _invariant_subspace(R.A, lambda x: not near(x))
    X = np.hstack([L, M])
    coeff = solve_or_invert(X, R.Gamma, tol).x
    p = L.shape[1]

    def piece(B, g, S):
        if B.shape[1] == 0:
            return Realization(np.zeros((0, 0)), np.zeros((0, 0)), np.zeros((0, R.m)), S, tol)
        A_b = B.conj().T @ R.A @ B
        G_b = gram(B, R.J)
        J, A_n, Gam_n = normalize_gram(A_b, g, G_b, tol)
        A_n = 0.5 * (A_n + J @ A_n.conj().T @ J)
        return Realization(J, A_n, Gam_n, S, tol)

    R_alpha = piece(L, coeff[:p], None)
    H_alpha = piece(M, coeff[p:], R.S)
    return R_alpha, H_alpha


def regularize_derivative(R_alpha, beta, c=1.0, tol=DEFAULT_TOL):
    """Add ``B / (beta - z)`` so that ``Gamma^+ Gamma`` becomes invertible.

    ``B = c * Pi`` with ``Pi`` the orthogonal projection onto
    ``ker(Gamma^+ Gamma)``.  The state space grows by ``rank(Pi)`` positive
    directions at the eigenvalue ``beta``.
    """
    beta_c = complex(beta)
    if abs(beta_c.imag) > 0:
        raise AssumptionError("beta must be real", "real_beta")
    beta = beta_c.real
    if c < 0:
        raise AssumptionError("c must be nonnegative", "positive_c")
    _check_off_spectrum(R_alpha.A, beta)
    G = R_alpha.Gamma_plus @ R_alpha.Gamma
    G = 0.5 * (G + G.conj().T)
    _, U, signs = hermitian_eigen(G, tol)
    N = U[:, signs == 0]
    k = N.shape[1]
    if k == 0:
        return R_alpha
    n = R_alpha.n
    J = np.zeros((n + k, n + k), complex)
    J[:n, :n] = R_alpha.J.J
    J[n:, n:] = np.eye(k)
    A = np.zeros((n + k, n + k), complex)
    A[:n, :n] = R_alpha.A
    A[n:, n:] = beta * np.eye(k)
    Gamma = np.vstack([R_alpha.Gamma, np.sqrt(c) * N.conj().T])
    out = Realization(J, A, Gamma, R_alpha.S, tol)
    GG = out.Gamma_plus @ out.Gamma
    try:
        bounded = solve_or_invert(GG, tol=tol).bounded
    except Exception:
        bounded = False
    if not bounded:
        raise ParametersInsufficientError(
            f"Gamma^+ Gamma remains ill-conditioned after regularization with c = {c}")
    return out


