"""
The Lie algebra
===============

Tangent vectors at the identity are written ``x L1 + y L2`` in the basis::

    L1 = [[-1, 0], [1, 0]]      L2 = [[0, 1], [0, -1]]

The bracket of any two tangent vectors is a multiple of ``L1 - L2``, so that
line is the only proper ideal.
"""

# %%
# Brackets
# --------
from liemarkov import L1, L2, TangentVector, bracket, find_proper_ideal, is_ideal_member

X = TangentVector(1.0, 2.0)
W = TangentVector(3.0, 1.0)
B = bracket(X, W)
print("[X, W]        =", B)
print("[L1, L2]      =", bracket(L1, L2))

dense = X.to_array() @ W.to_array() - W.to_array() @ X.to_array()
print("dense         =", dense.tolist())
print("in the ideal? =", is_ideal_member(B))

# %%
# Searching for ideals
# --------------------
# ``find_proper_ideal`` does not assume the answer.  It looks for directions
# whose bracket with both basis vectors stays on the same line.
print("proper ideal spanned by", find_proper_ideal())

# %%
# The subgroup generated by L1 - L2
# ---------------------------------
# Exponentiating the ideal gives ``h(s) = M(s, -s)``, which has determinant
# exactly one and adds parameters under multiplication.
from liemarkov import det, h, multiply

print("h(0.5) h(0.25) =", multiply(h(0.5), h(0.25)), "  h(0.75) =", h(0.75))
print("det h(3.7)     =", det(h(3.7)))
