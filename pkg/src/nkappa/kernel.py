"""Nevanlinna kernel and sampled estimates of its negative squares."""

import numpy as np

from .numeric import DEFAULT_TOL, hermitian_eigen, matrix_norm
from .realization import derivative, evaluate, spectrum
from .sampling import SamplePlan

__all__ = [
    "SamplePlan",
    "nevanlinna_kernel",
    "kernel_gram",
    "estimate_negative_squares",
    "check_symmetry",
]


def nevanlinna_kernel(R, z, w, diagonal_eps=1e-12):
    """``N(z, w) = (Q(z) - Q(w)^*) / (z - conj(w))``.

    When ``z = conj(w)`` the removable singularity is filled with ``Q'(z)``.
    """
    z, w = complex(z), complex(w)
    d = z - w.conjugate()
    if abs(d) <= diagonal_eps * max(1.0, abs(z)):
        return derivative(R, z)
    return (evaluate(R, z) - evaluate(R, w).conj().T) / d


def kernel_gram(R, points, directions):
    """Hermitian matrix ``(N(z_b, z_a) h_b, h_a)`` over paired points and unit vectors.

    ``directions`` holds one column ``h_a`` per entry of ``points``.
    """
    points = np.asarray(points, dtype=complex)
    H = np.asarray(directions, dtype=complex)
    k = points.size
    Gr = np.empty((k, k), complex)
    for a in range(k):
        for b in range(a, k):
            Gr[a, b] = H[:, a].conj() @ nevanlinna_kernel(R, points[b], points[a]) @ H[:, b]
            Gr[b, a] = Gr[a, b].conjugate() if a != b else Gr[a, b].real
    return Gr


def estimate_negative_squares(R, plan=SamplePlan(count=12), directions=2, tol=DEFAULT_TOL):
    """Lower bound for the number of negative squares of the kernel.

    Each sample point contributes ``directions`` seeded complex Gaussian
    unit vectors.  Returns ``(kappa_lower, history)`` where ``history[i]`` is
    the running maximum of negative eigenvalue counts over the first
    ``i + 1`` points.
    """
    zs = plan.points(exclude=spectrum(R.A))
    rng = np.random.default_rng([plan.seed, 1])
    m = R.m
    pts, dirs = [], []
    for z in zs:
        h = rng.standard_normal((m, directions)) + 1j * rng.standard_normal((m, directions))
        h /= np.linalg.norm(h, axis=0)
        pts.extend([z] * directions)
        dirs.append(h)
    H = np.hstack(dirs) if dirs else np.zeros((m, 0))
    full = kernel_gram(R, np.array(pts), H)
    history = []
    best = 0
    for i in range(1, len(zs) + 1):
        sub = full[: i * directions, : i * directions]
        best = max(best, int(np.sum(hermitian_eigen(sub, tol).signs < 0)))
        history.append(best)
    return best, history


def check_symmetry(R, plan=SamplePlan()):
    """Largest ``||Q(z)^* - Q(conj z)|| / (1 + ||Q(z)||)`` over the sample points."""
    res = 0.0
    for z in plan.points(exclude=spectrum(R.A)):
        Qz = evaluate(R, z)
        res = max(res, matrix_norm(Qz.conj().T - evaluate(R, z.conjugate())) / (1 + matrix_norm(Qz)))
    return float(res)
