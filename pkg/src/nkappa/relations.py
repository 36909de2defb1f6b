"""Finite-dimensional linear relations.

A relation ``T`` from ``H = C^p`` into ``K = C^q`` is a subspace of
``H x K``.  It is stored as a ``(p + q) x r`` matrix whose columns span the
subspace; the top ``p`` rows are the ``H`` components.  The stored basis is
always canonical (reduced column echelon form of an orthonormalized basis),
so two relations are equal exactly when their ``pairs`` agree.

Closedness hypotheses that appear for relations in infinite dimension hold
automatically here and are not checked.
"""

import numpy as np

from .errors import DimensionError
from .krein import FundamentalSymmetry
from .numeric import DEFAULT_TOL, null_space, rank_and_range

__all__ = [
    "LinearRelation",
    "canonical_basis",
    "relation_parts",
    "relation_algebra",
    "inverse",
    "compose",
    "relation_sum",
    "scale",
    "adjoint",
    "operator_part_split",
]


def canonical_basis(V, tol=DEFAULT_TOL):
    """Canonical basis of span(V): reduced column echelon form.

    The columns are first orthonormalized, which fixes the rank at the
    threshold of :func:`rank_and_range`, and then row reduced (on the
    transpose) with partial pivoting.
    """
    V = np.asarray(V, dtype=complex)
    r, Q = rank_and_range(V, tol)
    if r == 0:
        return np.zeros((V.shape[0], 0), complex)
    R = Q.T.copy()
    N = R.shape[1]
    row = 0
    for col in range(N):
        if row == r:
            break
        piv = row + int(np.argmax(np.abs(R[row:, col])))
        if abs(R[piv, col]) <= 1e3 * tol.sign_eps:
            R[row:, col] = 0
            continue
        R[[row, piv]] = R[[piv, row]]
        R[row] /= R[row, col]
        for i in range(r):
            if i != row:
                R[i] -= R[i, col] * R[row]
        row += 1
    R[np.abs(R) < 1e-14] = 0
    return R.T


class LinearRelation:
    """Subspace of ``C^dim_h x C^dim_k`` spanned by the columns of ``pairs``."""

    def __init__(self, dim_h, dim_k, pairs, tol=DEFAULT_TOL):
        pairs = np.asarray(pairs, dtype=complex).reshape(dim_h + dim_k, -1)
        self.dim_h = int(dim_h)
        self.dim_k = int(dim_k)
        self.tol = tol
        self.pairs = canonical_basis(pairs, tol)

    @classmethod
    def graph(cls, M, tol=DEFAULT_TOL):
        """The graph ``{(f, M f)}`` of a matrix ``M``."""
        M = np.asarray(M, dtype=complex)
        q, p = M.shape
        return cls(p, q, np.vstack([np.eye(p), M]), tol)

    @classmethod
    def from_pairs(cls, tops, bottoms, tol=DEFAULT_TOL):
        tops = np.asarray(tops, dtype=complex)
        bottoms = np.asarray(bottoms, dtype=complex)
        return cls(tops.shape[0], bottoms.shape[0], np.vstack([tops, bottoms]), tol)

    @property
    def dim(self):
        return self.pairs.shape[1]

    @property
    def top(self):
        return self.pairs[: self.dim_h]

    @property
    def bottom(self):
        return self.pairs[self.dim_h:]

    def contains(self, f, g):
        v = np.concatenate([np.ravel(f), np.ravel(g)]).astype(complex)
        return rank_and_range(np.column_stack([self.pairs, v]), self.tol).rank == self.dim

    def is_operator(self):
        return relation_parts(self)["mul_part"].shape[1] == 0

    def matrix(self):
        """Matrix of a single-valued relation on its domain (least squares form)."""
        if not self.is_operator():
            raise DimensionError("relation is multivalued")
        return self.bottom @ np.linalg.pinv(self.top)

    def __eq__(self, other):
        if not isinstance(other, LinearRelation):
            return NotImplemented
        return (
            (self.dim_h, self.dim_k) == (other.dim_h, other.dim_k)
            and self.pairs.shape == other.pairs.shape
            and np.allclose(self.pairs, other.pairs, atol=1e-8, rtol=0)
        )

    __hash__ = None

    def __repr__(self):
        return f"LinearRelation(dim_h={self.dim_h}, dim_k={self.dim_k}, dim={self.dim})"


def _subspace(V, tol):
    return canonical_basis(V, tol)


def relation_parts(T):
    """Domain, range, kernel and multivalued part ``T(0)`` as canonical bases."""
    F, G = T.top, T.bottom
    tol = T.tol
    null_G = null_space(G, tol) if T.dim else np.zeros((0, 0), complex)
    null_F = null_space(F, tol) if T.dim else np.zeros((0, 0), complex)
    return {
        "domain": _subspace(F, tol),
        "range": _subspace(G, tol),
        "kernel": _subspace(F @ null_G, tol) if T.dim else np.zeros((T.dim_h, 0), complex),
        "mul_part": _subspace(G @ null_F, tol) if T.dim else np.zeros((T.dim_k, 0), complex),
    }


def inverse(T):
    """``T^{-1} = {(g, f) : (f, g) in T}``."""
    return LinearRelation(T.dim_k, T.dim_h, np.vstack([T.bottom, T.top]), T.tol)


def compose(R, T):
    """Product ``R T = {(f, k) : (f, g) in T, (g, k) in R for some g}``."""
    if T.dim_k != R.dim_h:
        raise DimensionError(f"cannot compose: T maps into C^{T.dim_k}, R acts on C^{R.dim_h}")
    tol = T.tol
    N = null_space(np.hstack([T.bottom, -R.top]), tol)
    a, b = N[: T.dim], N[T.dim:]
    return LinearRelation(T.dim_h, R.dim_k, np.vstack([T.top @ a, R.bottom @ b]), tol)


def relation_sum(S, T):
    """``S + T = {(f, g + k) : (f, g) in S, (f, k) in T}``."""
    if (S.dim_h, S.dim_k) != (T.dim_h, T.dim_k):
        raise DimensionError("relations must act between the same spaces")
    tol = S.tol
    N = null_space(np.hstack([S.top, -T.top]), tol)
    a, b = N[: S.dim], N[S.dim:]
    return LinearRelation(S.dim_h, S.dim_k, np.vstack([S.top @ a, S.bottom @ a + T.bottom @ b]), tol)


def scale(T, z):
    """``z T = {(f, z g)}``."""
    return LinearRelation(T.dim_h, T.dim_k, np.vstack([T.top, z * T.bottom]), T.tol)


def _jm(J, n):
    if J is None:
        return np.eye(n, dtype=complex)
    M = J.J if isinstance(J, FundamentalSymmetry) else np.asarray(J, dtype=complex)
    if M.shape != (n, n):
        raise DimensionError(f"symmetry has shape {M.shape}, expected {(n, n)}")
    return M


def adjoint(T, J_h=None, J_k=None):
    """Indefinite adjoint ``T^+ = {(k, h) : [k, g] = [h, f] for all (f, g) in T}``.

    ``J_h`` and ``J_k`` are the fundamental symmetries of the two sides;
    ``None`` means a Hilbert side.
    """
    Jh, Jk = _jm(J_h, T.dim_h), _jm(J_k, T.dim_k)
    # [k, g] - [h, f] = g^* Jk k - f^* Jh h
    constraints = np.hstack([T.bottom.conj().T @ Jk, -(T.top.conj().T @ Jh)])
    N = null_space(constraints, T.tol)
    return LinearRelation(T.dim_k, T.dim_h, N, T.tol)


_OPS = {
    "inverse": inverse,
    "compose": compose,
    "sum": relation_sum,
    "scale": scale,
    "adjoint": adjoint,
}


def relation_algebra(op, *args, **kwargs):
    """Dispatch ``op`` (one of inverse, compose, sum, scale, adjoint)."""
    try:
        fn = _OPS[op]
    except KeyError:
        raise ValueError(f"unknown relation operation {op!r}") from None
    return fn(*args, **kwargs)


def operator_part_split(T):
    """Split ``T`` into its operator part and its purely multivalued part.

    ``T_inf = {(0, g) in T}`` and ``T_tilde`` keeps each pair ``(f, g)`` with
    ``g`` replaced by its Euclidean projection onto the orthogonal complement
    of ``T(0)``.  ``T`` is the direct sum of the two.
    """
    mul = relation_parts(T)["mul_part"]
    tol = T.tol
    if mul.shape[1]:
        M = rank_and_range(mul, tol).basis
        proj = np.eye(T.dim_k) - M @ M.conj().T
    else:
        proj = np.eye(T.dim_k)
    T_tilde = LinearRelation(T.dim_h, T.dim_k, np.vstack([T.top, proj @ T.bottom]), tol)
    T_inf = LinearRelation(T.dim_h, T.dim_k, np.vstack([np.zeros((T.dim_h, mul.shape[1])), mul]), tol)
    return T_tilde, T_inf
