"""
Counting negative squares from samples
======================================

The Nevanlinna kernel N(z, w) = (Q(z) - Q(w)^*) / (z - conj(w)) is
Hermitian.  Gram matrices built from it over points in the upper half-plane
have at most kappa negative eigenvalues, and generic choices reach kappa.
"""

import numpy as np

from nkappa import load_fixture
from nkappa.kernel import SamplePlan, check_symmetry, estimate_negative_squares, nevanlinna_kernel
from nkappa.realization import Realization

R2 = load_fixture("example2")
# on the diagonal z = conj(w) the quotient is replaced by Q'(z)
print("N(i, -i) = Q'(i) =\n", nevanlinna_kernel(R2, 1j, -1j).round(12))
print("N(i, i) = Im Q(i) =\n", nevanlinna_kernel(R2, 1j, 1j).round(12))

for name in ["example2", "example4"]:
    R = load_fixture(name)
    k, history = estimate_negative_squares(R, SamplePlan(count=12, seed=0), directions=2)
    print(f"{name}: negative index of J = {R.J.negative_index}, estimate = {k}, history = {history}")
    print(f"  symmetry residual {check_symmetry(R):.1e}")

# a classical Nevanlinna function: J = I and A Hermitian
rng = np.random.default_rng(1)
H = rng.standard_normal((5, 5))
R = Realization(np.eye(5), H + H.T, rng.standard_normal((5, 2)))
print("J = I:", estimate_negative_squares(R, SamplePlan(count=12))[0], "negative squares")
