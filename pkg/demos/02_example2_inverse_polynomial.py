"""
When the inverse is a polynomial
================================

With Gamma square and invertible the projection P is the identity, the
resolvent part of -Q^{-1} vanishes and all of the negative index sits in
the linear term.
"""

import numpy as np

from nkappa import load_fixture
from nkappa.inversion import decompose_inverse, projection_P, zeros_of_Q
from nkappa.realization import evaluate, minimality

R = load_fixture("example2")
print("minimal:", minimality(R)[0])
print("P = I:", np.allclose(projection_P(R), np.eye(2)))

D = decompose_inverse(R)
print(f"kappa = {D.kappa}, kappa1 = {D.kappa1}, kappa2 = {D.kappa2}")

z = 0.3 + 1.5j
print("Q(z)        =\n", evaluate(R, z))
print("-Q(z)^{-1}  =\n", -np.linalg.inv(evaluate(R, z)))
print("S_hat + z G_hat =\n", D.q1(z))
print("Qhat2(z) =\n", D.q2(z))
print("zeros:", zeros_of_Q(R))
