"""
Inverting a 2 x 2 function with three states
============================================

The realization below has a 3-dimensional Pontryagin state space with two
negative squares.  We evaluate Q, build the projection P onto range(Gamma)
and split -Q^{-1} into a linear polynomial plus a one-state resolvent part.
"""

import numpy as np

from nkappa import load_fixture
from nkappa.inversion import decompose_inverse, invert_at, projection_P, zeros_of_Q
from nkappa.realization import derivative_at_infinity, evaluate

np.set_printoptions(precision=4, suppress=True)

R = load_fixture("example4")
print("J =\n", R.J.J.real)
print("A =\n", R.A.real)
print("Gamma =\n", R.Gamma.real)

# Q(z) = Gamma^+ (A - z)^{-1} Gamma is holomorphic at infinity
print("Q(2i) =\n", evaluate(R, 2j))
print("lim z Q(z) = -Gamma^+ Gamma =\n", derivative_at_infinity(R).real)

###############################################################################
# The projection P = Gamma (Gamma^+ Gamma)^{-1} Gamma^+ is J-orthogonal, so
# range(I - P) carries the rest of the negative index.

P = projection_P(R)
print("P =\n", P.real)

D = decompose_inverse(R)
print("S_hat =\n", D.S_hat.real)
print("G_hat =\n", D.G_hat.real)
print(f"kappa = {D.kappa}, kappa1 = {D.kappa1}, kappa2 = {D.kappa2}")

###############################################################################
# Qhat1(z) = S_hat + z G_hat and Qhat2 has a single pole, at -1.  That pole
# is the only finite zero of Q.

for z in [1j, 0.5 + 2j]:
    total = D.q1(z) + D.q2(z)
    print(f"z = {z}: |Qhat - (Qhat1 + Qhat2)| = {np.abs(invert_at(R, z) - total).max():.1e}")
    print("  Qhat2(z) =\n", D.q2(z), "\n  1/(2(1+z)) =", 1 / (2 * (1 + z)))

print("zeros of Q:", [(complex(z), k) for z, k in zeros_of_Q(R)])
