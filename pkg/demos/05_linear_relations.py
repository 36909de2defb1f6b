"""
Linear relations
================

A relation is a subspace of H x K.  Inverse, product, sum and adjoint are
all subspace computations, and every relation splits into a single-valued
part and its multivalued part T(0).
"""

import numpy as np

from nkappa.relations import (
    LinearRelation,
    adjoint,
    compose,
    inverse,
    operator_part_split,
    relation_parts,
)

np.set_printoptions(precision=3, suppress=True)

N = np.array([[0, 1], [0, 0]])
T = LinearRelation.graph(N)
print("ker N =", relation_parts(T)["kernel"].real.ravel())
print("N^{-1}(0) =", relation_parts(inverse(T))["mul_part"].real.ravel())

# a product of graphs is the graph of the product
M = np.array([[1.0, 2], [3, 4]])
print("graph(M) graph(N) == graph(MN):", compose(LinearRelation.graph(M), T) == LinearRelation.graph(M @ N))

# A is self-adjoint for the indefinite product given by J
J = np.array([[0, 1, 0], [1, 0, 0], [0, 0, -1]])
A = np.array([[0, 1, 0], [0, 0, 0], [0, 0, -1]])
G = LinearRelation.graph(A)
print("graph(A)^+ == graph(A):", adjoint(G, J, J) == G)

###############################################################################
# The relation spanned by (1, 0; 1, 1) and (0, 0; 0, 2) is multivalued.

T = LinearRelation(2, 2, np.array([[1, 0, 1, 1], [0, 0, 0, 2]]).T)
T_tilde, T_inf = operator_part_split(T)
print("T_tilde pairs =\n", T_tilde.pairs.real)
print("T_inf pairs =\n", T_inf.pairs.real)
