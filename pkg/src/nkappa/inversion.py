"""Inverse ``Qhat(z) = -Q(z)^{-1}`` of a holomorphic-at-infinity realization.

With ``G = Gamma^+ Gamma`` invertible, ``P = Gamma G^{-1} Gamma^+`` is a
``J``-orthogonal projection onto ``range(Gamma)`` and the state space splits
``J``-orthogonally into ``range(I - P)`` and ``range(P)``.  The compression
``Atilde = (I - P) A`` restricted to ``range(I - P)`` drives the resolvent
part of the inverse:

    Qhat(z) = G^{-1} Gamma^+ {A (I-P)(Atilde - z)^{-1}(I-P) A - (A - z)} Gamma G^{-1}
            = (Shat + z Ghat) + Gtilde^+ (Atilde - z)^{-1} Gtilde

``Atilde`` is stored in coordinates on a Euclidean-orthonormal basis ``B``
of ``range(I - P)``.
"""

import warnings
from dataclasses import dataclass, field

import numpy as np

from .errors import (
    AssumptionError,
    GramNotInvertibleError,
    NotHolomorphicAtInfinityError,
    NumericalError,
    SingularMatrixError,
    ValidationError,
)
from .krein import subspace_signature
from .numeric import (
    DEFAULT_TOL,
    as_matrix,
    cluster_eigenvalues,
    inertia,
    matrix_norm,
    null_space,
    rank_and_range,
    solve_or_invert,
)
from .realization import evaluate, minimality, resolvent_apply, spectrum
from .sampling import sample_points

__all__ = [
    "InverseDecomposition",
    "projection_P",
    "invert_at",
    "decompose_inverse",
    "verify_identity_46",
    "inverse_relation_multivalued_part",
    "inverse_resolvent_operator",
    "PoleCancellation",
    "pole_cancellation_function",
    "zeros_of_Q",
]


def _gram(R, tol):
    """Return ``(G, G^{-1}, cond)`` for ``G = Gamma^+ Gamma``."""
    if not R.holomorphic_at_infinity:
        raise NotHolomorphicAtInfinityError("inverse formula needs S = 0")
    G = R.Gamma_plus @ R.Gamma
    G = 0.5 * (G + G.conj().T)
    try:
        Ginv, cond, bounded = solve_or_invert(G, tol=tol)
    except SingularMatrixError as exc:
        raise GramNotInvertibleError(
            f"Gamma^+ Gamma is singular (rank {exc.rank} < {R.m})") from exc
    if not bounded:
        raise GramNotInvertibleError(
            f"Gamma^+ Gamma is not boundedly invertible (condition {cond:.3g})")
    return G, 0.5 * (Ginv + Ginv.conj().T), cond


def projection_P(R, tol=DEFAULT_TOL):
    """``P = Gamma (Gamma^+ Gamma)^{-1} Gamma^+``."""
    _, Ginv, _ = _gram(R, tol)
    return R.Gamma @ Ginv @ R.Gamma_plus


@dataclass
class _Pieces:
    G: np.ndarray
    Ginv: np.ndarray
    cond: float
    P: np.ndarray
    IP: np.ndarray
    B: np.ndarray
    A_tilde: np.ndarray


def _pieces(R, tol):
    G, Ginv, cond = _gram(R, tol)
    P = R.Gamma @ Ginv @ R.Gamma_plus
    IP = np.eye(R.n) - P
    r = R.n - R.m
    B = rank_and_range(IP, tol).basis
    if B.shape[1] != r:
        # range(I - P) = ker Gamma^+ has dimension n - m exactly
        U, _, _ = np.linalg.svd(IP)
        B = U[:, :r]
    A_tilde = B.conj().T @ IP @ R.A @ B
    return _Pieces(G, Ginv, cond, P, IP, B, A_tilde)


def _tilde_resolvent(pc, z):
    """``(I - P)(Atilde - z)^{-1}(I - P)`` as an ``n x n`` matrix."""
    X = resolvent_apply(pc.A_tilde, z, pc.B.conj().T @ pc.IP)
    return pc.B @ X


def _check_point(R, pc, z):
    z = complex(z)
    resolvent_apply(R.A, z, np.zeros((R.n, 0)))
    resolvent_apply(pc.A_tilde, z, np.zeros((pc.A_tilde.shape[0], 0)))
    return z


def invert_at(R, z, tol=DEFAULT_TOL):
    """``Qhat(z) = -Q(z)^{-1}`` through the projection formula."""
    pc = _pieces(R, tol)
    z = _check_point(R, pc, z)
    A = R.A
    inner = A @ _tilde_resolvent(pc, z) @ A - (A - z * np.eye(R.n))
    return pc.Ginv @ R.Gamma_plus @ inner @ R.Gamma @ pc.Ginv


@dataclass
class InverseDecomposition:
    """``Qhat = Qhat1 + Qhat2`` with ``Qhat1(z) = S_hat + z G_hat`` and
    ``Qhat2(z) = Gamma_tilde^+ (A_tilde - z)^{-1} Gamma_tilde``.

    ``B`` is an orthonormal basis of ``range(I - P)``; ``A_tilde`` and
    ``J_tilde`` are the compressed operator and the Gram matrix of ``J`` in
    that basis, and ``Gamma_tilde_coord = B^* Gamma_tilde``.
    """

    S_hat: np.ndarray
    G_hat: np.ndarray
    Gamma_tilde: np.ndarray
    B: np.ndarray
    A_tilde: np.ndarray
    J_tilde: np.ndarray
    kappa: int
    kappa1: int
    kappa2: int
    minimal: bool
    gram_condition: float
    P: np.ndarray = field(repr=False)

    @property
    def Gamma_tilde_coord(self):
        return self.B.conj().T @ self.Gamma_tilde

    def q1(self, z):
        return self.S_hat + complex(z) * self.G_hat

    def q2(self, z):
        g = self.Gamma_tilde_coord
        if g.shape[0] == 0:
            return np.zeros_like(self.S_hat)
        return g.conj().T @ self.J_tilde @ resolvent_apply(self.A_tilde, complex(z), g)

    def __call__(self, z):
        return self.q1(z) + self.q2(z)

    def zeros(self):
        return _cluster(self.A_tilde)


def decompose_inverse(R, tol=DEFAULT_TOL):
    """Polynomial and resolvent parts of ``-Q^{-1}`` with their negative indices.

    ``kappa`` is the negative index of ``J``; it equals the index of ``Q``
    only for minimal realizations, otherwise a warning is issued and it is
    an upper bound.
    """
    pc = _pieces(R, tol)
    Ginv = pc.Ginv
    Gp = R.Gamma_plus
    S_hat = -Ginv @ Gp @ R.A @ R.Gamma @ Ginv
    S_hat = 0.5 * (S_hat + S_hat.conj().T)
    Gamma_tilde = pc.IP @ R.A @ R.Gamma @ Ginv
    J_tilde = pc.B.conj().T @ R.J.J @ pc.B
    J_tilde = 0.5 * (J_tilde + J_tilde.conj().T)
    n_plus, n_zero, n_minus = subspace_signature(pc.B, R.J, tol) if pc.B.shape[1] else (0, 0, 0)
    if n_zero:
        raise NumericalError("indefinite product degenerates on range(I - P)", "nondegenerate")
    is_min, _ = minimality(R, tol)
    kappa = R.J.negative_index
    kappa1 = inertia(pc.G, tol)[2]
    kappa2 = n_minus
    if not is_min:
        warnings.warn("realization is not minimal: kappa from J is only an upper bound",
                      stacklevel=2)
    if kappa1 + kappa2 != kappa:
        raise NumericalError(
            f"index bookkeeping failed: kappa1 + kappa2 = {kappa1 + kappa2} != kappa = {kappa}",
            "index_sum")
    if not matrix_norm(Ginv) > 0:
        raise NumericalError("G_hat vanishes", "qhat1_nonzero")
    return InverseDecomposition(S_hat, Ginv, Gamma_tilde, pc.B, pc.A_tilde, J_tilde,
                                kappa, kappa1, kappa2, is_min, pc.cond, pc.P)


def verify_identity_46(R, z, tol=DEFAULT_TOL):
    """Relative residual of ``Qhat(z) Gamma^+ = G^{-1} Gamma^+ {-I + A (I-P)(Atilde-z)^{-1}(I-P)} (A - z)``.

    The left side is computed as ``-Q(z)^{-1} Gamma^+`` directly from the
    realization, independently of the projection machinery.
    """
    pc = _pieces(R, tol)
    z = _check_point(R, pc, z)
    n = R.n
    lhs = -solve_or_invert(evaluate(R, z), R.Gamma_plus, tol).x
    rhs = pc.Ginv @ R.Gamma_plus @ (-np.eye(n) + R.A @ _tilde_resolvent(pc, z)) @ (R.A - z * np.eye(n))
    return float(matrix_norm(lhs - rhs) / max(1.0, matrix_norm(rhs)))


def inverse_resolvent_operator(R, z0, tol=DEFAULT_TOL):
    """``(A - z0)^{-1} (I + P A (I-P)(Atilde - z0)^{-1}) (I - P)``."""
    z0 = complex(z0)
    if abs(z0.imag) <= tol.sign_eps:
        raise AssumptionError(f"z0 = {z0} must be non-real", "nonreal_point")
    pc = _pieces(R, tol)
    _check_point(R, pc, z0)
    n = R.n
    inner = np.eye(n) + pc.P @ R.A @ _tilde_resolvent(pc, z0)
    return resolvent_apply(R.A, z0, inner @ pc.IP)


def inverse_relation_multivalued_part(R, z0, tol=DEFAULT_TOL):
    """Orthonormal basis of the kernel of the operator of :func:`inverse_resolvent_operator`.

    This kernel is the multivalued part of the representing relation of the
    inverse function and must coincide with ``range(Gamma)``; a mismatch
    raises :class:`NumericalError`.
    """
    op = inverse_resolvent_operator(R, z0, tol)
    # op vanishes identically when I - P = 0, so scale by the resolvent norm
    ref = matrix_norm(resolvent_apply(R.A, complex(z0), np.eye(R.n)))
    K = null_space(op, tol, reference=ref)
    if K.shape[1] != R.m:
        raise NumericalError(
            f"kernel has dimension {K.shape[1]}, expected dim range(Gamma) = {R.m}",
            "kernel_is_range_gamma")
    return K


@dataclass
class PoleCancellation:
    """``eta(z) = Qhat(z) Gamma^+ (x_0 + (z - alpha) x_1 + ... + (z - alpha)^{k-1} x_{k-1})``.

    Along a Jordan chain of ``A`` at ``alpha`` this equals

        (z - alpha)^k G^{-1} Gamma^+ (I - A (I-P)(Atilde - z)^{-1}(I-P)) x_{k-1},

    a vanishing of order ``k`` at ``alpha`` whenever ``alpha`` is not a zero
    of ``Q``.  ``leading`` is ``G^{-1} Gamma^+ x_{k-1}``, the limit of
    ``eta(z) / (z - alpha)^k`` as ``z -> infinity``; ``coefficients`` is the
    monomial ``leading * (z - alpha)^k`` as a list in powers of ``z - alpha``.
    """

    alpha: complex
    order: int
    leading: np.ndarray
    coefficients: list
    residual: float
    _R: object = field(repr=False)
    _tol: object = field(repr=False)
    _chain: np.ndarray = field(repr=False)

    def __call__(self, z):
        z = complex(z)
        pc = _pieces(self._R, self._tol)
        _check_point(self._R, pc, z)
        x = self._chain[:, -1]
        corr = x - self._R.A @ _tilde_resolvent(pc, z) @ x
        return (z - self.alpha) ** self.order * (pc.Ginv @ self._R.Gamma_plus @ corr)

    def monomial(self, z):
        return (complex(z) - self.alpha) ** self.order * self.leading

    def direct(self, z):
        """``Qhat(z) Gamma^+`` applied to the chain polynomial, via ``-Q(z)^{-1}``."""
        z = complex(z)
        poly = sum((z - self.alpha) ** j * self._chain[:, j] for j in range(self.order))
        Qz = evaluate(self._R, z)
        return -solve_or_invert(Qz, self._R.Gamma_plus @ poly, self._tol).x


def pole_cancellation_function(R, alpha, chain, tol=DEFAULT_TOL, samples=5, seed=0):
    """Pole cancellation function along a Jordan chain ``x_0, ..., x_{k-1}`` at ``alpha``.

    The chain must satisfy ``(A - alpha) x_0 = 0`` and
    ``(A - alpha) x_j = x_{j-1}``.  The closed form of ``eta`` is checked
    against ``-Q(z)^{-1} Gamma^+`` at ``samples`` seeded points.
    """
    alpha = complex(alpha)
    X = np.column_stack([as_matrix(x, "chain vector", ndim=1) for x in chain])
    if X.shape[0] != R.n or X.shape[1] == 0:
        raise ValidationError("chain vectors must be nonempty and live in the state space",
                              "jordan_chain")
    k = X.shape[1]
    N = R.A - alpha * np.eye(R.n)
    scale = max(1.0, matrix_norm(R.A)) * max(1.0, matrix_norm(X))
    bad = matrix_norm(N @ X[:, 0]) > 1e3 * tol.sign_eps * scale or not np.any(X[:, 0])
    for j in range(1, k):
        bad = bad or matrix_norm(N @ X[:, j] - X[:, j - 1]) > 1e3 * tol.sign_eps * scale
    if bad:
        raise ValidationError("vectors do not form a Jordan chain of A at alpha", "jordan_chain")
    pc = _pieces(R, tol)
    leading = pc.Ginv @ R.Gamma_plus @ X[:, -1]
    coeffs = [np.zeros(R.m, complex) for _ in range(k)] + [leading]
    out = PoleCancellation(alpha, k, leading, coeffs, 0.0, R, tol, X)
    exclude = np.concatenate([spectrum(R.A), spectrum(pc.A_tilde)])
    res = 0.0
    for z in sample_points(samples, seed, exclude=exclude):
        a, b = out(z), out.direct(z)
        res = max(res, matrix_norm(a - b) / max(1.0, matrix_norm(b)))
    out.residual = float(res)
    if res > 1e3 * tol.relative_eps * pc.cond:
        raise NumericalError(f"pole cancellation identity fails (residual {res:.3g})",
                             "pole_cancellation")
    return out


def _cluster(A_tilde):
    ev = spectrum(A_tilde)
    return cluster_eigenvalues(ev, 1e-6 * max(1.0, matrix_norm(A_tilde)))


def zeros_of_Q(R, tol=DEFAULT_TOL):
    """Finite generalized zeros of ``Q`` with algebraic multiplicities."""
    pc = _pieces(R, tol)
    return _cluster(pc.A_tilde)
