"""Seeded random realizations for invariant suites."""

import numpy as np

from .errors import NkappaError
from .numeric import DEFAULT_TOL
from .realization import Realization, minimality


def random_hermitian(rng, n):
    X = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
    return 0.5 * (X + X.conj().T)


def random_realization(rng, n, m, n_neg=None):
    """``A = J H`` with ``H`` random Hermitian, ``J`` diagonal with ``n_neg`` entries -1."""
    if n_neg is None:
        n_neg = int(rng.integers(0, n + 1))
    J = np.diag([-1.0] * n_neg + [1.0] * (n - n_neg))
    H = random_hermitian(rng, n)
    Gamma = rng.standard_normal((n, m)) + 1j * rng.standard_normal((n, m))
    return Realization(J, J @ H, Gamma)


def realization_suite(count=200, seed=0, max_n=8, max_m=4, gram_cond=1e6, tol=DEFAULT_TOL):
    """``count`` minimal random realizations with ``cond(Gamma^+ Gamma) <= gram_cond``.

    Draws with ``m <= n <= max_n`` and rejects candidates failing either
    condition.  Deterministic in ``seed``.
    """
    rng = np.random.default_rng(seed)
    out = []
    while len(out) < count:
        n = int(rng.integers(1, max_n + 1))
        m = int(rng.integers(1, min(n, max_m) + 1))
        R = random_realization(rng, n, m)
        G = R.Gamma_plus @ R.Gamma
        if np.linalg.cond(G) > gram_cond:
            continue
        try:
            if not minimality(R, tol)[0]:
                continue
        except NkappaError:
            continue
        out.append(R)
    return out
