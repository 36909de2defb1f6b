"""
Splitting off a pole, then fixing the derivative at infinity
============================================================

split_at_pole separates the root subspace of A at alpha.  The part at
alpha can have a singular Gamma^+ Gamma; adding B / (beta - z) with B the
projection onto its kernel makes it invertible again.
"""

import numpy as np

from nkappa import load_fixture
from nkappa.realization import Realization, evaluate, regularize_derivative, spectrum, split_at_pole

R = load_fixture("example4")
Ra, Ha = split_at_pole(R, 0)
print("spec(A_alpha) =", spectrum(Ra.A).round(9), " spec(A_H) =", spectrum(Ha.A).round(9))
z = 0.7 + 0.4j
print("|Q - Q_alpha - H_alpha| at z:", np.abs(evaluate(R, z) - evaluate(Ra, z) - evaluate(Ha, z)).max())

###############################################################################
# A rank-one Gamma into C^2 gives a singular Gamma^+ Gamma.

Rd = Realization(np.diag([1.0, -1.0]), np.diag([0.0, 2.0]), [[1.0, 1.0], [0.0, 0.0]])
print("Gamma^+ Gamma =\n", (Rd.Gamma_plus @ Rd.Gamma).real)
out = regularize_derivative(Rd, beta=1.0, c=1.0)
print("after regularization =\n", (out.Gamma_plus @ out.Gamma).real)
B = np.array([[0.5, -0.5], [-0.5, 0.5]])
print("difference equals B/(1 - z):", np.allclose(evaluate(out, z) - evaluate(Rd, z), B / (1 - z)))
