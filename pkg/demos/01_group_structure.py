"""
Markov matrices as a group
==========================

A 2x2 Markov matrix is stored by its two off-diagonal rates ``(a, b)``::

    M(a, b) = [[1 - a,  b   ],
               [  a,  1 - b ]]

Columns sum to one.  Products stay in the family, and ``det = 1 - (a + b)``.
"""

# %%
# Products and inverses
# ---------------------
import numpy as np

from liemarkov import IDENTITY, P, classify, det, inverse, multiply, parity_factor
from liemarkov import MarkovMatrix

N = MarkovMatrix(0.2, 0.4)
M = MarkovMatrix(0.1, 0.3)
NM = multiply(N, M)
print("N @ M        =", NM)
print("dense check  =", np.allclose((N.to_array() @ M.to_array()), NM.to_array()))
print("det(NM)      =", det(NM), "  det N * det M =", det(N) * det(M))

Minv = inverse(M)
print("inverse of M =", Minv)
print("M^-1 @ M     =", multiply(Minv, M))

# %%
# The two components
# ------------------
# The sign of the determinant splits the group in two.  Reflected matrices
# factor through the permutation ``P = M(1, 1)``.
for m in (IDENTITY, P, MarkovMatrix(0.5, 0.5), MarkovMatrix(0.9, 0.4)):
    print(f"{str(m):40s} det={det(m):+.3f}  {classify(m).value}")

pf = parity_factor(MarkovMatrix(0.9, 0.4))
print("M(0.9, 0.4) = P^k @ F with k-sign", pf.parity, "and F =", pf.factor)
print("reassembled:", multiply(P, pf.factor))
