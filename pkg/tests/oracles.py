"""Exact-arithmetic oracles (sympy) for subspace computations on integer data."""

import numpy as np
import sympy as sp


def smat(M):
    return sp.Matrix(np.asarray(M).tolist())


def canonical(V):
    """Reduced column echelon basis of span(V), exact."""
    V = sp.Matrix(V)
    if V.cols == 0:
        return sp.zeros(V.rows, 0)
    R, piv = V.T.rref()
    return R[: len(piv), :].T


def hstack(*Ms):
    return sp.Matrix.hstack(*Ms)


def vstack(*Ms):
    return sp.Matrix.vstack(*Ms)


def null(M, ncols):
    if M.rows == 0:
        return sp.eye(ncols)
    ns = M.nullspace()
    return hstack(*ns) if ns else sp.zeros(ncols, 0)


def to_numpy(M):
    return np.array(M.tolist(), dtype=complex).reshape(M.rows, M.cols)


class Rel:
    """Exact relation with ``p``-dimensional domain side, ``q``-dimensional range side."""

    def __init__(self, p, q, V):
        self.p, self.q = p, q
        V = sp.Matrix(V)
        self.V = canonical(V if V.cols else sp.zeros(p + q, 0))

    @property
    def F(self):
        return self.V[: self.p, :]

    @property
    def G(self):
        return self.V[self.p:, :]

    @property
    def r(self):
        return self.V.cols


def parts(T):
    nF = null(T.F, T.r)
    nG = null(T.G, T.r)
    return {
        "domain": canonical(T.F),
        "range": canonical(T.G),
        "kernel": canonical(T.F * nG),
        "mul_part": canonical(T.G * nF),
    }


def inverse(T):
    return Rel(T.q, T.p, vstack(T.G, T.F))


def compose(R, T):
    N = null(hstack(T.G, -R.F), T.r + R.r)
    return Rel(T.p, R.q, vstack(T.F * N[: T.r, :], R.G * N[T.r:, :]))


def rsum(S, T):
    N = null(hstack(S.F, -T.F), S.r + T.r)
    a, b = N[: S.r, :], N[S.r:, :]
    return Rel(S.p, S.q, vstack(S.F * a, S.G * a + T.G * b))


def scale(T, c):
    return Rel(T.p, T.q, vstack(T.F, c * T.G))


def adjoint(T, Jh, Jk):
    C = hstack(T.G.H * Jk, -(T.F.H * Jh))
    return Rel(T.q, T.p, null(C, T.q + T.p))


def split(T):
    M = parts(T)["mul_part"]
    if M.cols:
        Pi = sp.eye(T.q) - M * (M.H * M).inv() * M.H
    else:
        Pi = sp.eye(T.q)
    return Rel(T.p, T.q, vstack(T.F, Pi * T.G)), Rel(T.p, T.q, vstack(sp.zeros(T.p, M.cols), M))
